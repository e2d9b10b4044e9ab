from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Tuple, FrozenSet, Iterator, List

from ..util.rationals import ceil_div
from .exceptions import InstanceValidationException, CommitteeException


def mask_to_ids(mask: int) -> Tuple[int, ...]:
    """Ids (1-based) of the set bits of a voter or candidate mask"""
    ids = []
    while mask:
        low = mask & -mask
        ids.append(low.bit_length())
        mask ^= low
    return tuple(ids)


def ids_to_mask(ids: Iterable[int]) -> int:
    mask = 0
    for identifier in ids:
        mask |= 1 << (identifier - 1)
    return mask


@dataclass(frozen=True)
class ApprovalInstance:
    """An approval-based committee election (N, C, A, k).

    Voters and candidates are numbered from 1. Instances are immutable; the
    derived approver views are computed lazily and cached on the instance.
    """

    n: int
    m: int
    k: int
    ballots: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        ballots = tuple(frozenset(ballot) for ballot in self.ballots)
        object.__setattr__(self, 'ballots', ballots)
        self._validate()

    def _validate(self) -> None:
        if self.n < 1:
            raise InstanceValidationException(
                    f'Voter count must be positive, received {self.n}'
                )
        if self.m < 1:
            raise InstanceValidationException(
                    f'Candidate count must be positive, received {self.m}'
                )
        if not 1 <= self.k <= self.m:
            raise InstanceValidationException(
                    f'Committee size must be between 1 and {self.m}, '
                    f'received {self.k}'
                )
        if len(self.ballots) != self.n:
            raise InstanceValidationException(
                    f'Expected {self.n} ballots, received {len(self.ballots)}'
                )
        for voter, ballot in enumerate(self.ballots, start=1):
            for candidate in ballot:
                if not isinstance(candidate, int) or \
                        not 1 <= candidate <= self.m:
                    raise InstanceValidationException(
                            f'Voter {voter} approves unknown candidate '
                            f'{candidate!r}'
                        )

    @property
    def voters(self) -> range:
        return range(1, self.n + 1)

    @property
    def candidates(self) -> range:
        return range(1, self.m + 1)

    def ballot(self, voter: int) -> FrozenSet[int]:
        self.check_voter(voter)
        return self.ballots[voter - 1]

    def check_voter(self, voter: int) -> None:
        if not 1 <= voter <= self.n:
            raise InstanceValidationException(
                    f'Voter id {voter} is out of range 1..{self.n}'
                )

    def check_candidate(self, candidate: int) -> None:
        if not 1 <= candidate <= self.m:
            raise InstanceValidationException(
                    f'Candidate id {candidate} is out of range 1..{self.m}'
                )

    @cached_property
    def approver_masks(self) -> Tuple[int, ...]:
        # index 0 is unused so that candidate ids index directly
        masks = [0] * (self.m + 1)
        for voter, ballot in enumerate(self.ballots):
            bit = 1 << voter
            for candidate in ballot:
                masks[candidate] |= bit
        return tuple(masks)

    @cached_property
    def ballot_masks(self) -> Tuple[int, ...]:
        return tuple(ids_to_mask(ballot) for ballot in self.ballots)

    @cached_property
    def all_voters_mask(self) -> int:
        return (1 << self.n) - 1

    def approver_mask(self, candidate: int) -> int:
        self.check_candidate(candidate)
        return self.approver_masks[candidate]

    def approvers(self, candidate: int) -> FrozenSet[int]:
        return frozenset(mask_to_ids(self.approver_mask(candidate)))

    def voter_mask(self, voters: Iterable[int]) -> int:
        voters = tuple(voters)
        for voter in voters:
            self.check_voter(voter)
        return ids_to_mask(voters)

    def approval_count(self, candidate: int) -> int:
        return self.approver_mask(candidate).bit_count()

    def cohesive_threshold(self, level: int) -> int:
        if not 1 <= level <= self.k:
            raise InstanceValidationException(
                    f'Cohesion level must be between 1 and {self.k}, '
                    f'received {level}'
                )
        return ceil_div(level * self.n, self.k)

    @property
    def max_degree(self) -> int:
        return ceil_div(self.n, self.k)

    def has_cohesive_group(self) -> bool:
        threshold = self.cohesive_threshold(1)
        return any(
                mask.bit_count() >= threshold
                for mask in self.approver_masks[1:]
            )

    def describe(self) -> str:
        return f'n={self.n} m={self.m} k={self.k}'


@dataclass(frozen=True, order=True)
class Committee:
    """A winning set, stored as an ascending tuple of candidate ids.

    Ordering is lexicographic on the member tuple, which is the enumeration
    order used by every exhaustive search.
    """

    members: Tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(self.members))
        if len(set(members)) != len(members):
            raise CommitteeException(
                    f'Committee contains duplicate candidates: {members}'
                )
        for candidate in members:
            if not isinstance(candidate, int) or candidate < 1:
                raise CommitteeException(
                        f'Invalid candidate id in committee: {candidate!r}'
                    )
        object.__setattr__(self, 'members', members)

    @classmethod
    def of(cls, *members: int) -> 'Committee':
        return cls(tuple(members))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, candidate: object) -> bool:
        return candidate in self.members

    def validate_for(self, instance: ApprovalInstance) -> 'Committee':
        if len(self.members) != instance.k:
            raise CommitteeException(
                    f'Committee has {len(self.members)} members but the '
                    f'instance requires k={instance.k}'
                )
        for candidate in self.members:
            if candidate > instance.m:
                raise CommitteeException(
                        f'Committee member {candidate} is out of range '
                        f'1..{instance.m}'
                    )
        return self

    def swap(self, removed: int, added: int) -> 'Committee':
        if removed not in self.members:
            raise CommitteeException(f'{removed} is not a committee member')
        if added in self.members:
            raise CommitteeException(f'{added} is already a committee member')
        return Committee(
                tuple(c for c in self.members if c != removed) + (added,)
            )

    def to_list(self) -> List[int]:
        return list(self.members)

    def __str__(self) -> str:
        return '{' + ','.join(str(c) for c in self.members) + '}'


def committee_from_ids(
            instance: ApprovalInstance,
            ids: Iterable[int]
        ) -> Committee:
    return Committee(tuple(ids)).validate_for(instance)


def approvers(instance: ApprovalInstance, candidate: int) -> FrozenSet[int]:
    return instance.approvers(candidate)


def satisfaction(
            instance: ApprovalInstance,
            voter: int,
            committee: Committee
        ) -> int:
    """|A_i ∩ W| for voter i"""
    ballot = instance.ballot(voter)
    return sum(1 for candidate in committee if candidate in ballot)


def satisfactions(
            instance: ApprovalInstance,
            committee: Committee
        ) -> List[int]:
    """Satisfaction of every voter, indexed from 0"""
    members = set(committee.members)
    return [len(ballot & members) for ballot in instance.ballots]


def cohesive_threshold(instance: ApprovalInstance, level: int) -> int:
    return instance.cohesive_threshold(level)


def has_cohesive_group(instance: ApprovalInstance) -> bool:
    return instance.has_cohesive_group()
