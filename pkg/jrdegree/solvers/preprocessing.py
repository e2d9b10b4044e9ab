from typing import Dict, List, NamedTuple, Tuple

from ..core.instance import ApprovalInstance, Committee
from ..logging import log


class CollapsedInstance(NamedTuple):
    instance: ApprovalInstance
    # id_map[reduced id] is the original candidate id, index 0 unused
    id_map: Tuple[int, ...]

    def restore(self, committee: Committee) -> Committee:
        return Committee(tuple(self.id_map[c] for c in committee))


def collapse_duplicate_candidates(
            instance: ApprovalInstance
        ) -> CollapsedInstance:
    """Keep at most k candidates (the smallest ids) of every approver set.

    A committee holds at most k copies of a candidate type, so the dropped
    copies never change the attainable JR or EJR degrees.
    """
    kept: List[int] = []
    copies: Dict[int, int] = {}
    for candidate in instance.candidates:
        mask = instance.approver_masks[candidate]
        count = copies.get(mask, 0)
        if count < instance.k:
            kept.append(candidate)
        copies[mask] = count + 1
    reduced_ids = {original: index for index, original in
                   enumerate(kept, start=1)}
    ballots = tuple(
            frozenset(
                reduced_ids[candidate] for candidate in ballot
                if candidate in reduced_ids
            )
            for ballot in instance.ballots
        )
    reduced = ApprovalInstance(
            n=instance.n,
            m=len(kept),
            k=instance.k,
            ballots=ballots
        )
    log.debug(
            f'Collapsed {instance.m} candidate(s) to {reduced.m} '
            f'({len(copies)} distinct approver set(s))'
        )
    return CollapsedInstance(reduced, (0,) + tuple(kept))
