from fractions import Fraction

import pytest

from jrdegree.core.formats import serialize_instance
from jrdegree.degree.cohesion import max_cohesion_level
from jrdegree.generators.cnf import CnfFormula, parse_dimacs, \
    serialize_dimacs, is_sparse, is_satisfiable
from jrdegree.generators.exceptions import CnfFormatException, \
    GeneratorException, PaddingBudgetException, SetCoverFormatException, \
    SparsityException
from jrdegree.generators.families import gen_appendix_b, appendix_b_blocks, \
    gen_pav_failure
from jrdegree.generators.randomized import gen_random
from jrdegree.generators.sat_reduction import sat_to_sparse_sat, \
    pad_sparse_sat, sparse_sat_to_voting
from jrdegree.generators.set_cover import SetCoverInstance, \
    parse_set_cover, serialize_set_cover, has_cover, set_cover_to_mdjr, \
    normalize_for_mdejr, set_cover_to_mdejr
from jrdegree.solvers.exact import brute_force_max_jr

EXAMPLE_FORMULA = 'c (x1 or not x3) and (not x1 or x2)\np cnf 3 2\n1 -3 0\n' \
    '-1 2 0\n'


def test_example_families(tiny, prop_example, pav_fail_2):
    assert (tiny.n, tiny.m, tiny.k) == (4, 4, 1)
    assert (prop_example.n, prop_example.m, prop_example.k) == (9, 6, 3)
    assert prop_example.approvers(3) == frozenset({1, 2, 7, 8, 9})
    assert (pav_fail_2.n, pav_fail_2.m, pav_fail_2.k) == (49, 8, 7)
    larger = gen_pav_failure(3)
    assert (larger.n, larger.m, larger.k) == (100, 11, 10)


def test_appendix_b_blocks(golden):
    blocks = appendix_b_blocks(2)
    assert blocks[0] == [1, 2, 3, 4]
    assert blocks[1] == [4, 5, 6, 7]
    assert blocks[4] == [13, 14, 15, 16]
    assert blocks[5] == [15, 16, 1, 2]
    assert all(len(block) == 4 for block in blocks)
    instance = gen_appendix_b(2)
    assert (instance.n, instance.m, instance.k) == (16, 12, 8)
    assert instance.approvers(11) == frozenset({1, 2, 15, 16})
    golden('appendix-b_2.abc', serialize_instance(instance))
    larger = gen_appendix_b(3)
    assert (larger.n, larger.m, larger.k) == (108, 28, 24)


@pytest.mark.parametrize('generator', [gen_appendix_b, gen_pav_failure])
def test_size_parameter_must_be_at_least_two(generator):
    with pytest.raises(GeneratorException):
        generator(1)


def test_parse_dimacs():
    formula = parse_dimacs(EXAMPLE_FORMULA)
    assert formula.variable_count == 3
    assert formula.clauses == (frozenset({1, -3}), frozenset({-1, 2}))
    assert serialize_dimacs(formula) == 'p cnf 3 2\n1 -3 0\n-1 2 0\n'
    spanning = parse_dimacs('p cnf 2 1\n1\n-2 0\n')
    assert spanning.clauses == (frozenset({1, -2}),)


@pytest.mark.parametrize('text', [
    '1 2 0\n',
    'p cnf 2 2\n1 2 0\n',
    'p cnf 2 1\n1 2\n',
    'p cnf 2 1\n1 3 0\n',
    'p cnf 2 1\n1 -1 0\n',
    'p cnf 2 1\n1 x 0\n'
])
def test_parse_dimacs_rejects(text):
    with pytest.raises(CnfFormatException):
        parse_dimacs(text)


def test_satisfiability_and_sparsity():
    formula = parse_dimacs(EXAMPLE_FORMULA)
    assert is_sparse(formula)
    assert is_satisfiable(formula)
    contradiction = CnfFormula(1, (frozenset({1}), frozenset({-1})))
    assert not is_satisfiable(contradiction)
    shared = CnfFormula(2, (frozenset({1, 2}), frozenset({-1, -2})))
    assert not is_sparse(shared)
    with pytest.raises(GeneratorException):
        is_satisfiable(CnfFormula(21, ()))


def test_sat_to_sparse_sat_splits_frequent_variables():
    formula = parse_dimacs('p cnf 2 3\n1 2 0\n-1 0\n1 -2 0\n')
    sparse = sat_to_sparse_sat(formula)
    assert sparse.variable_count == 4
    assert sparse.clauses == (
            frozenset({1, 4}), frozenset({-2}), frozenset({3, -4}),
            frozenset({1, -2}), frozenset({2, -3}), frozenset({3, -1})
        )
    assert is_sparse(sparse)
    assert not is_satisfiable(formula)
    assert not is_satisfiable(sparse)


def test_sat_to_sparse_sat_breaks_shared_clause_pairs():
    formula = CnfFormula(2, (frozenset({1, 2}), frozenset({-1, -2})))
    sparse = sat_to_sparse_sat(formula)
    assert sparse.variable_count == 4
    assert sparse.clauses[:2] == (frozenset({1, 4}), frozenset({-2, -4}))
    assert sparse.clause_count == 5
    assert is_sparse(sparse)
    assert is_satisfiable(sparse)


def test_pad_sparse_sat():
    formula = parse_dimacs(EXAMPLE_FORMULA)
    padded = pad_sparse_sat(formula, 1)
    assert padded.variable_count == 9
    assert padded.clauses[-1] == frozenset(range(4, 10))
    assert is_sparse(padded)
    assert pad_sparse_sat(formula, 2).variable_count == 3 + 36
    with pytest.raises(PaddingBudgetException) as error:
        pad_sparse_sat(formula, 2, budget=10)
    assert error.value.required == 36
    with pytest.raises(GeneratorException):
        pad_sparse_sat(formula, 0)


def test_sparse_sat_to_voting_example():
    instance = sparse_sat_to_voting(parse_dimacs(EXAMPLE_FORMULA))
    assert (instance.n, instance.m, instance.k) == (20, 12, 4)
    assert instance.ballot(1) == frozenset({1, 2, 9})
    assert instance.ballot(10) == frozenset({1, 6, 7})
    assert instance.ballot(16) == frozenset({7, 8, 9, 10, 11, 12})
    assert instance.ballot(20) == frozenset({12})
    assert max_cohesion_level(instance) == 1
    assert brute_force_max_jr(instance)[0] == 5


def test_sparse_sat_to_voting_requires_sparsity():
    with pytest.raises(SparsityException):
        sparse_sat_to_voting(
                CnfFormula(2, (frozenset({1, 2}), frozenset({-1, -2})))
            )


def test_parse_set_cover():
    instance = parse_set_cover('# example\n3 3 2\n1 2\n\n3\n')
    assert instance.subsets == (
            frozenset({1, 2}), frozenset(), frozenset({3})
        )
    assert serialize_set_cover(instance) == '3 3 2\n1 2\n\n3\n'
    with pytest.raises(SetCoverFormatException):
        parse_set_cover('3 1\n1\n')
    with pytest.raises(SetCoverFormatException):
        parse_set_cover('3 1 1\n1 1\n')
    with pytest.raises(GeneratorException):
        parse_set_cover('3 1 1\n4\n')


def test_set_cover_to_mdjr():
    coverable = SetCoverInstance(3, ({1, 2}, {3}, {1}), 2)
    assert has_cover(coverable)
    instance = set_cover_to_mdjr(coverable)
    assert (instance.n, instance.m, instance.k) == (6, 3, 2)
    assert instance.ballot(1) == frozenset({1, 3})
    assert instance.ballot(6) == frozenset({1, 2, 3})
    assert brute_force_max_jr(instance)[0] == 3
    uncoverable = SetCoverInstance(3, ({1}, {2}, {3}), 2)
    assert not has_cover(uncoverable)
    assert brute_force_max_jr(set_cover_to_mdjr(uncoverable))[0] < 3


@pytest.mark.parametrize('budget, subsets', [(1, ({1},)), (3, ({1}, {1}))])
def test_set_cover_to_mdjr_rejects_budgets(budget, subsets):
    with pytest.raises(GeneratorException):
        set_cover_to_mdjr(SetCoverInstance(1, subsets, budget))


def test_normalize_for_mdejr():
    normal = normalize_for_mdejr(SetCoverInstance(1, ({1},), 1))
    assert normal.universe_size == 675
    assert normal.budget == 2
    assert normal.subsets[0] == frozenset(range(1, 10))
    assert normal.subsets[1] == frozenset(range(2, 10))
    assert normal.subsets[2] == frozenset(range(10, 676))


def test_set_cover_to_mdejr_sizes():
    instance = set_cover_to_mdejr(SetCoverInstance(1, ({1},), 1))
    assert (instance.n, instance.m, instance.k) == (4500, 7, 5)
    assert instance.ballot(1) == frozenset({1, 4})
    assert instance.ballot(4500) == frozenset({7})


def test_gen_random_is_seeded(golden):
    instance = gen_random(10, 6, 3, Fraction(1, 2), 42)
    assert instance == gen_random(10, 6, 3, '1/2', 42)
    assert instance != gen_random(10, 6, 3, '1/2', 43)
    golden('random_n10_m6_k3_p1-2_s42.abc', serialize_instance(instance))
    empty = gen_random(3, 2, 1, 0, 1)
    assert all(not ballot for ballot in empty.ballots)


@pytest.mark.parametrize('arguments', [
    (0, 2, 1, '1/2'),
    (2, 2, 3, '1/2'),
    (2, 2, 1, '3/2'),
    (2, 2, 1, 'half')
])
def test_gen_random_rejects(arguments):
    with pytest.raises(GeneratorException):
        gen_random(*arguments, seed=1)
