from dataclasses import dataclass
from typing import Callable, Optional

from ..core.instance import ApprovalInstance, Committee
from ..degree.oracles import get_evaluator
from ..logging import log
from ..rules.greedy import greedy_av
from ..rules.local_search import fpt_lambda, ls_pav
from ..util.rationals import ceil_div
from .exceptions import SolverException
from .exact import first_committee_with_degree
from .search import SearchObjective


@dataclass(frozen=True)
class FptOutcome:
    committee: Committee
    degree: Optional[int]
    enumerated: int
    extended_loop_bound: bool


def _raise_degree(
            instance: ApprovalInstance,
            objective: SearchObjective,
            initial: Committee,
            lower: int,
            budget: Optional[int],
            workers: int,
            index_limit: Optional[int]
        ) -> FptOutcome:
    """Replace the committee by the first one reaching c, for c = lower
    upward, until no committee reaches c.

    The loop runs up to ceil(n/k), the largest attainable degree. Each search
    resumes after the rank of the previous hit, since every earlier committee
    is already known to fall short, and c jumps past the degree of the hit.
    """
    evaluator = get_evaluator(instance, index_limit)
    score: Callable = evaluator.jr_value if objective is SearchObjective.JR \
        else evaluator.ejr_value
    committee = initial
    degree = score(committee.members)
    upper = instance.max_degree
    extended = instance.n % instance.k != 0
    if degree is None:
        log.warning(
                'The instance has no cohesive group; every committee has an '
                'undefined degree'
            )
        return FptOutcome(committee, None, 0, extended)
    if lower > upper:
        raise SolverException(
                f'Degree loop is empty: lower bound {lower} exceeds {upper}'
            )
    log.debug(
            f'Starting {objective.value.upper()} degree loop at c={lower} '
            f'from {committee} (degree {degree}), upper bound {upper}'
        )
    enumerated = 0
    start = 0
    target = lower
    while target <= upper:
        outcome = first_committee_with_degree(
                instance,
                objective,
                target,
                start=start,
                budget=budget,
                workers=workers,
                index_limit=index_limit
            )
        enumerated += outcome.enumerated
        if outcome.committee is None:
            log.debug(f'No committee reaches c={target}')
            break
        committee = outcome.committee
        degree = outcome.value
        log.debug(
                f'c={target}: hit {committee} at rank {outcome.rank} with '
                f'degree {degree}'
            )
        start = outcome.rank + 1
        target = degree + 1
    return FptOutcome(committee, degree, enumerated, extended)


def run_mdjr(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1,
            index_limit: Optional[int] = None
        ) -> FptOutcome:
    return _raise_degree(
            instance,
            SearchObjective.JR,
            greedy_av(instance),
            ceil_div(instance.n, instance.k ** 2),
            budget,
            workers,
            index_limit
        )


def run_mdejr(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1,
            index_limit: Optional[int] = None
        ) -> FptOutcome:
    k = instance.k
    initial, _ = ls_pav(instance, fpt_lambda(instance))
    return _raise_degree(
            instance,
            SearchObjective.EJR,
            initial,
            ceil_div(instance.n, k * (k + 1) ** 2),
            budget,
            workers,
            index_limit
        )


def mdjr_rule(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Committee:
    """Committee with the maximum JR degree, starting from GreedyAV"""
    return run_mdjr(instance, budget, workers).committee


def mdejr_rule(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Committee:
    """Committee with the maximum EJR degree, starting from LS-PAV with
    λ = n/(k(k+1))"""
    return run_mdejr(instance, budget, workers).committee
