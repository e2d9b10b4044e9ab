from fractions import Fraction

import pytest

from jrdegree.core.instance import ApprovalInstance, Committee
from jrdegree.degree.exceptions import OracleCapExceededException
from jrdegree.degree.oracles import jr_degree, ejr_degree
from jrdegree.generators.randomized import gen_random
from jrdegree.rules.exceptions import InvalidLambdaException
from jrdegree.solvers.dispatch import Rule, solve, get_valid_rules
from jrdegree.solvers.exact import brute_force_max_jr, brute_force_max_ejr, \
    exists_committee_with_jr_degree, exists_committee_with_ejr_degree, \
    first_committee_with_degree
from jrdegree.solvers.exceptions import BudgetExceededException, \
    SolverException
from jrdegree.solvers.fpt import run_mdjr, run_mdejr, mdjr_rule, mdejr_rule
from jrdegree.solvers.preprocessing import collapse_duplicate_candidates
from jrdegree.solvers.search import SearchObjective


def test_brute_force_maxima(tiny, prop_example, appendix_b_2, pav_fail_2):
    assert brute_force_max_jr(tiny) == (4, Committee.of(1))
    assert brute_force_max_jr(prop_example) == (3, Committee.of(1, 2, 3))
    assert brute_force_max_ejr(prop_example) == (3, Committee.of(1, 2, 3))
    assert brute_force_max_jr(appendix_b_2)[0] == 2
    assert brute_force_max_ejr(appendix_b_2)[0] == 2
    assert brute_force_max_ejr(pav_fail_2) == \
        (7, Committee.of(1, 2, 3, 4, 5, 7, 8))


def test_separation_family_maxima(appendix_b_2, golden):
    # within the committees starting 1..6 the block {13..16} keeps three
    # voters below two approved members
    jr = brute_force_max_jr(appendix_b_2)
    ejr = brute_force_max_ejr(appendix_b_2)
    golden(
            'appendix-b_2_maxima.txt',
            f'jr: {jr[0]} {jr[1]}\nejr: {ejr[0]} {ejr[1]}\n'
        )


def test_decision_versions(prop_example):
    assert exists_committee_with_jr_degree(prop_example, 3) == \
        Committee.of(1, 2, 3)
    assert exists_committee_with_ejr_degree(prop_example, 4) is None
    with pytest.raises(SolverException):
        first_committee_with_degree(prop_example, SearchObjective.PAV, 1)
    with pytest.raises(SolverException):
        first_committee_with_degree(prop_example, SearchObjective.JR, 0)


def test_brute_force_without_cohesive_group():
    instance = ApprovalInstance(2, 2, 1, (frozenset({1}), frozenset({2})))
    assert brute_force_max_jr(instance) == (None, Committee.of(1))


def test_mdjr_and_mdejr_on_examples(prop_example, pav_fail_2):
    outcome = run_mdjr(prop_example)
    assert outcome.committee == Committee.of(1, 2, 3)
    assert outcome.degree == 3
    assert outcome.enumerated == 1
    assert not outcome.extended_loop_bound
    outcome = run_mdejr(pav_fail_2)
    assert outcome.committee == Committee.of(1, 2, 3, 4, 5, 7, 8)
    assert outcome.degree == 7
    assert outcome.enumerated == 3
    assert mdejr_rule(pav_fail_2) == outcome.committee
    assert mdjr_rule(prop_example) == Committee.of(1, 2, 3)


def test_fpt_rules_report_extended_loop_bound():
    instance = ApprovalInstance(5, 3, 2, (
            frozenset({1}), frozenset({1}), frozenset({1, 2}),
            frozenset({2, 3}), frozenset({3})
        ))
    outcome = run_mdjr(instance)
    assert outcome.extended_loop_bound
    assert outcome.degree == brute_force_max_jr(instance)[0]


def test_fpt_rules_without_cohesive_group():
    instance = ApprovalInstance(2, 2, 1, (frozenset({1}), frozenset({2})))
    outcome = run_mdjr(instance)
    assert outcome.degree is None
    assert outcome.committee == Committee.of(1)
    assert outcome.enumerated == 0


@pytest.mark.parametrize('seed', range(30))
def test_fpt_rules_match_brute_force(seed):
    instance = gen_random(9, 6, 3, Fraction(2, 5), seed)
    jr_committee = mdjr_rule(instance)
    ejr_committee = mdejr_rule(instance)
    assert jr_degree(instance, jr_committee).jr_degree == \
        brute_force_max_jr(instance)[0]
    assert ejr_degree(instance, ejr_committee).ejr_degree == \
        brute_force_max_ejr(instance)[0]


def test_fpt_rules_do_not_depend_on_worker_count(pav_fail_2):
    assert run_mdejr(pav_fail_2, workers=2) == run_mdejr(pav_fail_2)


def test_collapse_duplicate_candidates():
    instance = ApprovalInstance(2, 5, 2, (
            frozenset({1, 2, 3, 4}), frozenset({1, 2, 3})
        ))
    collapsed = collapse_duplicate_candidates(instance)
    assert collapsed.instance.m == 4
    assert collapsed.id_map == (0, 1, 2, 4, 5)
    assert collapsed.restore(Committee.of(3, 4)) == Committee.of(4, 5)
    assert collapsed.instance.ballots == (
            frozenset({1, 2, 3}), frozenset({1, 2})
        )


def test_solve_dispatches_every_rule(prop_example):
    assert get_valid_rules() == [
            'greedyav', 'lspav', 'pav', 'mdjr', 'mdejr', 'brute-jr',
            'brute-ejr'
        ]
    for rule in Rule:
        result = solve(prop_example, rule)
        assert result.rule == rule.value
        assert len(result.committee) == 3
        assert result.c_max_proven == (rule in {
                Rule.MDJR, Rule.MDEJR, Rule.BRUTE_JR, Rule.BRUTE_EJR
            })


def test_solve_result_fields(tiny, pav_fail_2):
    result = solve(tiny, 'greedyav')
    assert result.to_dict() == {
            'rule': 'greedyav',
            'committee': [1],
            'jr_degree': 4,
            'ejr_degree': 4,
            'c_max_proven': False,
            'enumerated': 0,
            'extended_loop_bound': False,
            'collapsed': False
        }
    pav = solve(pav_fail_2, 'pav')
    assert pav.committee == Committee(tuple(range(1, 8)))
    assert pav.ejr_degree == 6
    assert pav.enumerated == 8
    mdejr = solve(pav_fail_2, 'mdejr', workers=2)
    assert mdejr.ejr_degree == 7


def test_solve_lspav_options(tiny):
    result = solve(tiny, 'lspav', threshold='0', initial=Committee.of(3))
    assert result.committee == Committee.of(1)
    assert result.trace.swap_count == 1
    assert result.to_dict(include_trace=True)['trace'] == [
            {'removed': 3, 'added': 1, 'delta': {'num': 2, 'den': 1}}
        ]
    with pytest.raises(InvalidLambdaException):
        solve(tiny, 'lspav', threshold='-1')


def test_solve_enforces_budget(pav_fail_2):
    with pytest.raises(BudgetExceededException):
        solve(pav_fail_2, 'mdejr', budget=4)
    assert solve(pav_fail_2, 'greedyav', budget=1).committee is not None


def test_solve_enforces_index_limit(prop_example):
    with pytest.raises(OracleCapExceededException):
        solve(prop_example, 'mdejr', index_limit=3)
    with pytest.raises(OracleCapExceededException):
        solve(prop_example, 'greedyav', index_limit=3)
    # the JR loop never builds the index
    assert run_mdjr(prop_example, index_limit=3).degree == 3


def test_solve_collapses_duplicates():
    instance = ApprovalInstance(2, 4, 1, (
            frozenset({1, 2, 3}), frozenset({1, 2, 3})
        ))
    result = solve(instance, 'brute-jr', collapse_duplicates=True)
    assert result.collapsed
    assert result.committee == Committee.of(1)
    assert result.jr_degree == 2
    assert result.enumerated == 1
    untouched = solve(instance, 'greedyav', collapse_duplicates=True)
    assert not untouched.collapsed
