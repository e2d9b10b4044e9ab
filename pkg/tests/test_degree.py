from fractions import Fraction
from itertools import combinations

import pytest

from jrdegree.core.instance import ApprovalInstance, Committee
from jrdegree.degree.cohesion import cohesion_index, max_cohesion_level
from jrdegree.degree.exceptions import OracleCapExceededException
from jrdegree.degree.naive import ejr_degree_naive
from jrdegree.degree.oracles import jr_degree, ejr_degree, degree_report, \
    satisfies_jr, satisfies_ejr, witness_represented_count, get_evaluator
from jrdegree.degree.proportionality import proportionality_profile
from jrdegree.generators.randomized import gen_random


@pytest.mark.parametrize('member, degree', [(1, 4), (2, 3), (3, 2), (4, 1)])
def test_nested_ballot_degrees(tiny, member, degree):
    report = degree_report(tiny, Committee.of(member))
    assert report.jr_degree == degree
    assert report.ejr_degree == degree


@pytest.mark.parametrize('member, value', [
    (1, Fraction(1)),
    (2, Fraction(3, 4)),
    (3, Fraction(1, 2)),
    (4, Fraction(1, 4))
])
def test_nested_ballot_proportionality(tiny, member, value):
    profile = proportionality_profile(tiny, Committee.of(member))
    assert profile.levels == [1]
    assert profile.get(1) == value


def test_proportionality_example_degrees(prop_example):
    duplicated = degree_report(prop_example, Committee.of(4, 5, 6))
    assert (duplicated.jr_degree, duplicated.ejr_degree) == (2, 2)
    spread = degree_report(prop_example, Committee.of(1, 2, 3))
    assert (spread.jr_degree, spread.ejr_degree) == (3, 3)


def test_proportionality_example_profiles(prop_example):
    duplicated = proportionality_profile(prop_example, Committee.of(4, 5, 6))
    assert duplicated.values == {1: Fraction(2), 2: Fraction(3)}
    spread = proportionality_profile(prop_example, Committee.of(1, 2, 3))
    assert spread.values == {1: Fraction(5, 3), 2: Fraction(2)}
    assert spread.to_text() == 'f(1)=5/3 f(2)=2'
    assert spread.to_dict() == {
            '1': {'num': 5, 'den': 3},
            '2': {'num': 2, 'den': 1}
        }


def test_witness_certifies_the_degree(prop_example):
    committee = Committee.of(4, 5, 6)
    report = jr_degree(prop_example, committee)
    witness = report.jr_witness
    assert witness.level == 1
    assert witness.shared_candidates == (1,)
    assert witness.voters == (3, 1, 2)
    assert witness.unrepresented == (3,)
    assert witness.represented_count == 2
    assert witness_represented_count(prop_example, committee, witness) == 2
    assert witness.to_dict() == {
            'level': 1,
            'candidates': [1],
            'voters': [3, 1, 2],
            'represented': 2
        }


def test_pav_failure_degrees(pav_fail_2):
    pav_like = ejr_degree(pav_fail_2, Committee(tuple(range(1, 8))))
    assert pav_like.ejr_degree == 6
    assert pav_like.ejr_witness.level == 2
    assert pav_like.ejr_witness.shared_candidates == (7, 8)
    best = ejr_degree(pav_fail_2, Committee.of(1, 2, 3, 4, 5, 7, 8))
    assert best.ejr_degree == 7


def test_undefined_degrees_without_cohesive_group():
    instance = ApprovalInstance(2, 2, 1, (frozenset({1}), frozenset({2})))
    report = degree_report(instance, Committee.of(1))
    assert report.jr_degree is None
    assert report.ejr_degree is None
    assert report.to_dict() == {
            'jr_degree': None,
            'ejr_degree': None,
            'jr_witness': None,
            'ejr_witness': None
        }
    assert satisfies_jr(instance, Committee.of(1))
    assert satisfies_ejr(instance, Committee.of(2))
    assert proportionality_profile(instance, Committee.of(1)).values == {}


def test_axioms(prop_example):
    assert satisfies_jr(prop_example, Committee.of(4, 5, 6))
    instance = ApprovalInstance(
            4, 3, 2,
            (frozenset({1}), frozenset({1}), frozenset({2}), frozenset({2}))
        )
    assert not satisfies_jr(instance, Committee.of(1, 3))
    assert not satisfies_ejr(instance, Committee.of(1, 3))
    assert satisfies_ejr(instance, Committee.of(1, 2))


def test_cohesion_index(tiny, prop_example):
    assert [(group.level, group.candidates)
            for group in cohesion_index(tiny)] == [(1, (1,))]
    assert max_cohesion_level(prop_example) == 2
    assert max_cohesion_level(
            ApprovalInstance(2, 2, 1, (frozenset({1}), frozenset({2})))
        ) == 0


def unanimous_instance(n: int, m: int, k: int) -> ApprovalInstance:
    everything = frozenset(range(1, m + 1))
    return ApprovalInstance(n, m, k, tuple(everything for _ in range(n)))


def test_jr_degree_skips_the_cohesion_index():
    # every candidate set of size at most 13 is eligible for EJR
    instance = unanimous_instance(4, 26, 13)
    committee = Committee(tuple(range(1, 14)))
    report = jr_degree(instance, committee)
    assert report.jr_degree == 1
    assert report.jr_witness.shared_candidates == (1,)
    assert satisfies_jr(instance, committee)
    assert 'groups' not in vars(get_evaluator(instance))


def test_cohesion_index_limit():
    instance = unanimous_instance(4, 26, 13)
    committee = Committee(tuple(range(1, 14)))
    with pytest.raises(OracleCapExceededException) as error:
        ejr_degree(instance, committee, index_limit=50)
    assert error.value.cap == 50
    with pytest.raises(OracleCapExceededException):
        cohesion_index(instance, 50)
    assert len(cohesion_index(unanimous_instance(4, 4, 2), 10)) == 10
    with pytest.raises(OracleCapExceededException):
        cohesion_index(unanimous_instance(4, 4, 2), 9)


@pytest.mark.parametrize('seed', range(10))
def test_degrees_grow_when_a_member_gains_approvals(seed):
    base = gen_random(8, 5, 2, Fraction(1, 2), seed)
    # 6 is approved by everyone, 7 by no one
    instance = ApprovalInstance(
            base.n, base.m + 2, base.k,
            tuple(ballot | {6} for ballot in base.ballots)
        )
    for other in range(1, 6):
        weaker = Committee.of(other, 7)
        stronger = weaker.swap(7, 6)
        before = degree_report(instance, weaker)
        after = degree_report(instance, stronger)
        assert before.jr_degree <= after.jr_degree
        assert before.ejr_degree <= after.ejr_degree


def test_naive_oracle_matches_on_examples(tiny, prop_example):
    for instance in (tiny, prop_example):
        for members in combinations(instance.candidates, instance.k):
            committee = Committee(members)
            assert ejr_degree_naive(instance, committee).ejr_degree == \
                ejr_degree(instance, committee).ejr_degree


@pytest.mark.parametrize('seed', range(20))
def test_naive_oracle_matches_on_random_instances(seed):
    instance = gen_random(8, 5, 2, Fraction(1, 2), seed)
    for members in combinations(instance.candidates, instance.k):
        committee = Committee(members)
        naive = ejr_degree_naive(instance, committee)
        assert naive.ejr_degree == \
            ejr_degree(instance, committee).ejr_degree
        if naive.ejr_witness is not None:
            assert witness_represented_count(
                    instance, committee, naive.ejr_witness
                ) == naive.ejr_degree


def test_oracle_caps():
    wide = ApprovalInstance(1, 25, 1, (frozenset({1}),))
    with pytest.raises(OracleCapExceededException):
        proportionality_profile(wide, Committee.of(1))
    crowded = ApprovalInstance(17, 1, 1, tuple(frozenset({1}) for _ in
                                               range(17)))
    with pytest.raises(OracleCapExceededException):
        ejr_degree_naive(crowded, Committee.of(1))
