import pytest

from jrdegree.core.exceptions import CommitteeException, \
    InstanceValidationException
from jrdegree.core.instance import ApprovalInstance, Committee, \
    committee_from_ids, satisfaction, satisfactions, mask_to_ids, \
    ids_to_mask


def test_masks_and_ids():
    assert ids_to_mask([1, 3, 4]) == 0b1101
    assert mask_to_ids(0b1101) == (1, 3, 4)
    assert mask_to_ids(0) == ()


def test_approver_views(tiny):
    assert tiny.approvers(2) == frozenset({2, 3, 4})
    assert tiny.approver_mask(2) == 0b1110
    assert tiny.approval_count(4) == 1
    assert tiny.voter_mask([1, 4]) == 0b1001
    with pytest.raises(InstanceValidationException):
        tiny.voter_mask([5])


def test_cohesive_threshold_and_max_degree(prop_example):
    assert prop_example.cohesive_threshold(1) == 3
    assert prop_example.cohesive_threshold(2) == 6
    assert prop_example.max_degree == 3
    with pytest.raises(InstanceValidationException):
        prop_example.cohesive_threshold(4)


def test_instance_allows_fewer_voters_than_seats():
    instance = ApprovalInstance(1, 3, 2, (frozenset({1}),))
    assert instance.cohesive_threshold(1) == 1
    assert instance.max_degree == 1


@pytest.mark.parametrize('n, m, k, ballots', [
    (0, 1, 1, ()),
    (1, 1, 2, (frozenset(),)),
    (2, 2, 1, (frozenset(),)),
    (1, 2, 1, (frozenset({3}),))
])
def test_instance_validation(n, m, k, ballots):
    with pytest.raises(InstanceValidationException):
        ApprovalInstance(n, m, k, ballots)


def test_committee_is_sorted_and_ordered():
    assert Committee((3, 1, 2)).members == (1, 2, 3)
    assert Committee.of(1, 2, 4) < Committee.of(1, 3, 4)
    assert str(Committee.of(2, 1)) == '{1,2}'
    assert Committee.of(1, 2).swap(1, 5).members == (2, 5)


def test_committee_validation(prop_example):
    with pytest.raises(CommitteeException):
        Committee.of(1, 1)
    with pytest.raises(CommitteeException):
        committee_from_ids(prop_example, [1, 2])
    with pytest.raises(CommitteeException):
        committee_from_ids(prop_example, [1, 2, 7])
    with pytest.raises(CommitteeException):
        Committee.of(1, 2).swap(3, 4)


def test_satisfactions(prop_example):
    values = satisfactions(prop_example, Committee.of(4, 5, 6))
    assert values == [3, 3, 0, 3, 3, 0, 3, 3, 0]
    committee = Committee.of(4, 5, 6)
    assert [satisfaction(prop_example, voter, committee)
            for voter in prop_example.voters] == values
    with pytest.raises(InstanceValidationException):
        satisfaction(prop_example, 10, committee)
