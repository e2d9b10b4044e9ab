from enum import Enum
from fractions import Fraction
from typing import List, Optional, Union

from ..core.instance import ApprovalInstance, Committee
from ..degree.oracles import get_evaluator
from ..logging import log
from ..rules.greedy import greedy_av
from ..rules.local_search import guarantee_lambda, ls_pav
from .exact import maximize_degree
from .fpt import run_mdejr, run_mdjr
from .preprocessing import collapse_duplicate_candidates
from .result import SolverResult
from .search import CommitteeSearch, SearchObjective


class Rule(str, Enum):
    GREEDY_AV = 'greedyav'
    LS_PAV = 'lspav'
    PAV = 'pav'
    MDJR = 'mdjr'
    MDEJR = 'mdejr'
    BRUTE_JR = 'brute-jr'
    BRUTE_EJR = 'brute-ejr'


def get_valid_rules() -> List[str]:
    return [rule.value for rule in Rule]


ENUMERATING_RULES = {
        Rule.PAV,
        Rule.MDJR,
        Rule.MDEJR,
        Rule.BRUTE_JR,
        Rule.BRUTE_EJR
    }


def solve(
            instance: ApprovalInstance,
            rule: Union[Rule, str],
            threshold: Union[Fraction, int, str, None] = None,
            initial: Optional[Committee] = None,
            seed: Optional[int] = None,
            budget: Optional[int] = None,
            workers: int = 1,
            collapse_duplicates: bool = False,
            index_limit: Optional[int] = None
        ) -> SolverResult:
    """Run one committee rule and report the degrees of its output.

    `threshold`, `initial` and `seed` only apply to lspav, whose threshold
    defaults to 1/(2k²). Duplicate collapsing only applies to the
    enumerating rules. `index_limit` bounds the EJR cohesion index.
    """
    rule = Rule(rule)
    target = instance
    collapsed = None
    if collapse_duplicates and rule in ENUMERATING_RULES:
        collapsed = collapse_duplicate_candidates(instance)
        target = collapsed.instance
    enumerated = 0
    proven = False
    extended = False
    trace = None
    if rule is Rule.GREEDY_AV:
        committee = greedy_av(target)
    elif rule is Rule.LS_PAV:
        if threshold is None:
            threshold = guarantee_lambda(target)
        committee, trace = ls_pav(target, threshold, initial, seed)
    elif rule is Rule.PAV:
        outcome = CommitteeSearch(
                target,
                SearchObjective.PAV,
                budget,
                workers,
                index_limit=index_limit
            ).maximize()
        committee = outcome.committee
        enumerated = outcome.enumerated
    elif rule in (Rule.MDJR, Rule.MDEJR):
        runner = run_mdjr if rule is Rule.MDJR else run_mdejr
        outcome = runner(target, budget, workers, index_limit)
        committee = outcome.committee
        enumerated = outcome.enumerated
        extended = outcome.extended_loop_bound
        proven = True
    else:
        objective = SearchObjective.JR if rule is Rule.BRUTE_JR \
            else SearchObjective.EJR
        outcome = maximize_degree(
                target,
                objective,
                budget,
                workers,
                index_limit
            )
        committee = outcome.committee
        enumerated = outcome.enumerated
        proven = True
    if collapsed is not None:
        committee = collapsed.restore(committee)
    evaluator = get_evaluator(instance, index_limit)
    result = SolverResult(
            rule=rule.value,
            committee=committee,
            jr_degree=evaluator.jr_value(committee.members),
            ejr_degree=evaluator.ejr_value(committee.members),
            c_max_proven=proven,
            enumerated=enumerated,
            extended_loop_bound=extended,
            collapsed=collapsed is not None and
            collapsed.instance.m < instance.m,
            trace=trace
        )
    log.info(
            f'{rule.value}: {committee} (JR degree {result.jr_degree}, EJR '
            f'degree {result.ejr_degree})'
        )
    return result
