from typing import Optional, Tuple

from ..core.instance import ApprovalInstance, Committee
from .exceptions import SolverException
from .search import CommitteeSearch, SearchObjective, SearchOutcome


def first_committee_with_degree(
            instance: ApprovalInstance,
            objective: SearchObjective,
            degree: int,
            start: int = 0,
            budget: Optional[int] = None,
            workers: int = 1,
            index_limit: Optional[int] = None
        ) -> SearchOutcome:
    if objective is SearchObjective.PAV:
        raise SolverException('PAV score is not a degree objective')
    if degree < 1:
        raise SolverException(f'Degree must be positive, received {degree}')
    search = CommitteeSearch(
            instance,
            objective,
            budget,
            workers,
            index_limit=index_limit
        )
    return search.first_at_least(degree, start)


def maximize_degree(
            instance: ApprovalInstance,
            objective: SearchObjective,
            budget: Optional[int] = None,
            workers: int = 1,
            index_limit: Optional[int] = None
        ) -> SearchOutcome:
    search = CommitteeSearch(
            instance,
            objective,
            budget,
            workers,
            index_limit=index_limit
        )
    return search.maximize(cap=instance.max_degree)


def exists_committee_with_jr_degree(
            instance: ApprovalInstance,
            degree: int,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Optional[Committee]:
    """Lexicographically first committee with a JR degree of at least
    `degree`, or None"""
    return first_committee_with_degree(
            instance,
            SearchObjective.JR,
            degree,
            budget=budget,
            workers=workers
        ).committee


def exists_committee_with_ejr_degree(
            instance: ApprovalInstance,
            degree: int,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Optional[Committee]:
    return first_committee_with_degree(
            instance,
            SearchObjective.EJR,
            degree,
            budget=budget,
            workers=workers
        ).committee


def brute_force_max_jr(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Tuple[Optional[int], Committee]:
    """Maximum JR degree over all committees with the lexicographically first
    committee achieving it. The degree is None when no cohesive group
    exists."""
    outcome = maximize_degree(instance, SearchObjective.JR, budget, workers)
    return outcome.value, outcome.committee


def brute_force_max_ejr(
            instance: ApprovalInstance,
            budget: Optional[int] = None,
            workers: int = 1
        ) -> Tuple[Optional[int], Committee]:
    outcome = maximize_degree(instance, SearchObjective.EJR, budget, workers)
    return outcome.value, outcome.committee
