from typing import List

from ..core.instance import ApprovalInstance, Committee
from ..logging import log


def greedy_av(instance: ApprovalInstance) -> Committee:
    """Greedy Approval Voting.

    Each round selects the candidate approved by the most voters not yet
    covered (smallest id on ties) and drops its approvers from the live set.
    """
    masks = instance.approver_masks
    live = instance.all_voters_mask
    chosen: List[int] = []
    for _ in range(instance.k):
        best = None
        best_count = -1
        for candidate in instance.candidates:
            if candidate in chosen:
                continue
            count = (masks[candidate] & live).bit_count()
            if count > best_count:
                best = candidate
                best_count = count
        chosen.append(best)
        live &= ~masks[best]
        log.debug(f'GreedyAV picked {best} covering {best_count} voter(s)')
    return Committee(tuple(chosen))
