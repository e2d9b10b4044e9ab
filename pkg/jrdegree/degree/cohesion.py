from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, List, Optional

from ..core.instance import ApprovalInstance
from ..logging import log
from .exceptions import OracleCapExceededException

DEFAULT_COHESION_INDEX_LIMIT = 10 ** 6


@dataclass(frozen=True)
class CohesiveCandidateSet:
    """A candidate set T whose common approvers N(T) are numerous enough to
    host an ℓ-cohesive group with ℓ = |T|"""

    level: int
    candidates: Tuple[int, ...]
    approvers: int
    threshold: int

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.level, self.candidates)


def jr_candidate_sets(
            instance: ApprovalInstance
        ) -> Tuple[CohesiveCandidateSet, ...]:
    """The level 1 entries of the cohesion index: one per candidate with at
    least ceil(n/k) approvers, in candidate order"""
    threshold = instance.cohesive_threshold(1)
    return tuple(
            CohesiveCandidateSet(1, (candidate,), approvers, threshold)
            for candidate, approvers
            in enumerate(instance.approver_masks[1:], start=1)
            if approvers.bit_count() >= threshold
        )


class _IndexBuilder:

    def __init__(self, instance: ApprovalInstance, limit: int):
        self.instance = instance
        self.limit = limit
        self.found: List[CohesiveCandidateSet] = []

    def extend(
                self,
                prefix: Tuple[int, ...],
                approvers: int,
                start: int
            ) -> None:
        instance = self.instance
        level = len(prefix) + 1
        if level > instance.k:
            return
        threshold = instance.cohesive_threshold(level)
        # supersets only lose approvers while the threshold grows
        if approvers.bit_count() < threshold:
            return
        masks = instance.approver_masks
        for candidate in range(start, instance.m + 1):
            common = approvers & masks[candidate]
            if common.bit_count() < threshold:
                continue
            if len(self.found) == self.limit:
                raise OracleCapExceededException(
                        'Eligible candidate sets exceed the cohesion index '
                        'limit',
                        self.limit + 1,
                        self.limit
                    )
            members = prefix + (candidate,)
            self.found.append(
                    CohesiveCandidateSet(level, members, common, threshold)
                )
            self.extend(members, common, candidate + 1)


@lru_cache(maxsize=128)
def cohesion_index(
            instance: ApprovalInstance,
            limit: Optional[int] = None
        ) -> Tuple[CohesiveCandidateSet, ...]:
    """All eligible (ℓ, T) pairs, ordered by level then lexicographically.

    The index does not depend on a committee, so it is built once per
    instance and shared by every degree evaluation. Its size can be
    exponential in k; building stops with OracleCapExceededException once it
    holds more than `limit` entries.
    """
    if limit is None:
        limit = DEFAULT_COHESION_INDEX_LIMIT
    builder = _IndexBuilder(instance, limit)
    builder.extend((), instance.all_voters_mask, 1)
    found = builder.found
    found.sort(key=lambda entry: entry.sort_key)
    log.debug(
            f'Cohesion index for {instance.describe()}: '
            f'{len(found)} eligible candidate set(s)'
        )
    return tuple(found)


def max_cohesion_level(
            instance: ApprovalInstance,
            limit: Optional[int] = None
        ) -> int:
    """Largest ℓ for which an ℓ-cohesive group exists, 0 when none does"""
    index = cohesion_index(instance, limit)
    return index[-1].level if index else 0
