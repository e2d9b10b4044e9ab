from fractions import Fraction
from typing import Optional

from ..core.instance import ApprovalInstance, Committee, satisfactions
from ..util.rationals import harmonic
from .exceptions import SwapException


def pav_score(instance: ApprovalInstance, committee: Committee) -> Fraction:
    """Σ_i H(|A_i ∩ W|)"""
    committee.validate_for(instance)
    return sum(
            (harmonic(value) for value in satisfactions(instance, committee)),
            Fraction(0)
        )


def swap_delta(
            instance: ApprovalInstance,
            committee: Committee,
            c_plus: int,
            c_minus: int
        ) -> Fraction:
    """Score change of replacing c_minus by c_plus, by the marginal formula"""
    committee.validate_for(instance)
    instance.check_candidate(c_plus)
    instance.check_candidate(c_minus)
    if c_plus in committee:
        raise SwapException(f'Candidate {c_plus} is already a member')
    if c_minus not in committee:
        raise SwapException(f'Candidate {c_minus} is not a member')
    delta = Fraction(0)
    for ballot, value in zip(
                instance.ballots,
                satisfactions(instance, committee)
            ):
        gains = c_plus in ballot
        loses = c_minus in ballot
        if gains and not loses:
            delta += Fraction(1, value + 1)
        elif loses and not gains:
            delta -= Fraction(1, value)
    return delta


def pav_exact(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Committee:
    """The PAV-score maximizing committee; ties go to the lexicographically
    smallest member set"""
    from ..solvers.search import SearchObjective, CommitteeSearch
    search = CommitteeSearch(
            instance,
            SearchObjective.PAV,
            budget=budget,
            workers=workers
        )
    return search.maximize().committee
