from functools import cached_property, lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.instance import ApprovalInstance, Committee, mask_to_ids
from ..core.witness import CohesiveWitness, DegreeReport
from .cohesion import CohesiveCandidateSet, cohesion_index, \
    jr_candidate_sets


class DegreeEvaluator:
    """Evaluates JR and EJR degrees of many committees of one instance.

    Voter sets are bitmasks (bit i-1 for voter i). For a committee the
    evaluator builds `levels`, where levels[ℓ] holds the voters approving at
    least ℓ members, then scans the cohesion index once.

    JR only looks at single candidates, so the full index is built on the
    first EJR evaluation and never for JR.
    """

    def __init__(
                self,
                instance: ApprovalInstance,
                index_limit: Optional[int] = None
            ):
        self.instance = instance
        self.index_limit = index_limit
        self.jr_groups = jr_candidate_sets(instance)
        self._masks = instance.approver_masks

    @cached_property
    def groups(self) -> Tuple[CohesiveCandidateSet, ...]:
        return cohesion_index(self.instance, self.index_limit)

    def has_cohesive_group(self) -> bool:
        return len(self.jr_groups) > 0

    def covered(self, members: Iterable[int]) -> int:
        covered = 0
        for candidate in members:
            covered |= self._masks[candidate]
        return covered

    def represented_levels(self, members: Sequence[int]) -> List[int]:
        k = self.instance.k
        levels = [self.instance.all_voters_mask] + [0] * k
        for count, candidate in enumerate(members, start=1):
            approvers = self._masks[candidate]
            for level in range(min(count, k), 0, -1):
                levels[level] |= levels[level - 1] & approvers
        return levels

    @staticmethod
    def _minimum(
                groups: Tuple[CohesiveCandidateSet, ...],
                levels: List[int]
            ) -> Tuple[Optional[int], Optional[CohesiveCandidateSet]]:
        best_value = None
        best_group = None
        for group in groups:
            unrepresented = (group.approvers & ~levels[group.level]) \
                .bit_count()
            value = group.threshold - min(group.threshold, unrepresented)
            if best_value is None or value < best_value:
                best_value = value
                best_group = group
                if value == 0:
                    break
        return best_value, best_group

    def jr_value(self, members: Sequence[int]) -> Optional[int]:
        return self._minimum(self.jr_groups, [0, self.covered(members)])[0]

    def ejr_value(self, members: Sequence[int]) -> Optional[int]:
        return self._minimum(
                self.groups,
                self.represented_levels(members)
            )[0]

    def _witness(
                self,
                group: CohesiveCandidateSet,
                represented: int,
                value: int
            ) -> CohesiveWitness:
        unrepresented = mask_to_ids(group.approvers & ~represented)
        others = mask_to_ids(group.approvers & represented)
        voters = (unrepresented + others)[:group.threshold]
        return CohesiveWitness(
                level=group.level,
                shared_candidates=group.candidates,
                voters=voters,
                represented_count=value
            )

    def jr_report(self, committee: Committee) -> DegreeReport:
        covered = self.covered(committee)
        value, group = self._minimum(self.jr_groups, [0, covered])
        if group is None:
            return DegreeReport()
        return DegreeReport(
                jr_degree=value,
                jr_witness=self._witness(group, covered, value)
            )

    def ejr_report(self, committee: Committee) -> DegreeReport:
        levels = self.represented_levels(committee.members)
        value, group = self._minimum(self.groups, levels)
        if group is None:
            return DegreeReport()
        return DegreeReport(
                ejr_degree=value,
                ejr_witness=self._witness(group, levels[group.level], value)
            )


@lru_cache(maxsize=128)
def get_evaluator(
            instance: ApprovalInstance,
            index_limit: Optional[int] = None
        ) -> DegreeEvaluator:
    return DegreeEvaluator(instance, index_limit)


def jr_degree(
            instance: ApprovalInstance,
            committee: Committee
        ) -> DegreeReport:
    committee.validate_for(instance)
    return get_evaluator(instance).jr_report(committee)


def ejr_degree(
            instance: ApprovalInstance,
            committee: Committee,
            index_limit: Optional[int] = None
        ) -> DegreeReport:
    committee.validate_for(instance)
    return get_evaluator(instance, index_limit).ejr_report(committee)


def degree_report(
            instance: ApprovalInstance,
            committee: Committee,
            index_limit: Optional[int] = None
        ) -> DegreeReport:
    return jr_degree(instance, committee).merge(
            ejr_degree(instance, committee, index_limit)
        )


def satisfies_jr(instance: ApprovalInstance, committee: Committee) -> bool:
    degree = jr_degree(instance, committee).jr_degree
    return degree is None or degree >= 1


def satisfies_ejr(
            instance: ApprovalInstance,
            committee: Committee,
            index_limit: Optional[int] = None
        ) -> bool:
    degree = ejr_degree(instance, committee, index_limit).ejr_degree
    return degree is None or degree >= 1


def witness_represented_count(
            instance: ApprovalInstance,
            committee: Committee,
            witness: CohesiveWitness
        ) -> int:
    members = set(committee.members)
    return sum(
            1 for voter in witness.voters
            if len(instance.ballot(voter) & members) >= witness.level
        )
