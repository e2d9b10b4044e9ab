from functools import lru_cache
from itertools import combinations
from typing import Tuple, NamedTuple

from ..core.instance import ApprovalInstance, Committee, mask_to_ids
from ..core.witness import CohesiveWitness, DegreeReport
from .exceptions import OracleCapExceededException
from .oracles import get_evaluator

DEFAULT_NAIVE_VOTER_CAP = 16


class VoterGroup(NamedTuple):
    level: int
    voters: int
    shared: int


@lru_cache(maxsize=32)
def _cohesive_voter_groups(
            instance: ApprovalInstance
        ) -> Tuple[VoterGroup, ...]:
    # groups larger than the threshold always contain a threshold-sized
    # subgroup with no more represented voters, so exact sizes suffice
    groups = []
    ballots = instance.ballot_masks
    for level in range(1, instance.k + 1):
        threshold = instance.cohesive_threshold(level)
        if threshold > instance.n:
            break
        for members in combinations(range(instance.n), threshold):
            shared = -1
            for voter in members:
                shared &= ballots[voter]
                if shared.bit_count() < level:
                    break
            if shared.bit_count() < level:
                continue
            voters = 0
            for voter in members:
                voters |= 1 << voter
            groups.append(VoterGroup(level, voters, shared))
    return tuple(groups)


def ejr_degree_naive(
            instance: ApprovalInstance,
            committee: Committee,
            cap: int = DEFAULT_NAIVE_VOTER_CAP
        ) -> DegreeReport:
    """EJR degree straight from the definition, over voter subsets.

    Exponential in n; used to validate the candidate-set search.
    """
    if instance.n > cap:
        raise OracleCapExceededException(
                'Voter count exceeds the naive oracle cap',
                instance.n,
                cap
            )
    committee.validate_for(instance)
    levels = get_evaluator(instance).represented_levels(committee.members)
    best = None
    for group in _cohesive_voter_groups(instance):
        represented = (group.voters & levels[group.level]).bit_count()
        if best is None or represented < best[0]:
            best = (represented, group)
            if represented == 0:
                break
    if best is None:
        return DegreeReport()
    represented, group = best
    unrepresented_ids = mask_to_ids(group.voters & ~levels[group.level])
    represented_ids = mask_to_ids(group.voters & levels[group.level])
    witness = CohesiveWitness(
            level=group.level,
            shared_candidates=mask_to_ids(group.shared)[:group.level],
            voters=unrepresented_ids + represented_ids,
            represented_count=represented
        )
    return DegreeReport(ejr_degree=represented, ejr_witness=witness)
