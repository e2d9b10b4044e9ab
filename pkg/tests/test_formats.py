from fractions import Fraction

import pytest

from jrdegree.core.exceptions import InstanceFormatException
from jrdegree.core.formats import parse_instance, serialize_instance, \
    read_instance, write_instance
from jrdegree.generators.randomized import gen_random
from jrdegree.util.io import IoException


def test_parse_instance_reads_header_and_ballots():
    instance = parse_instance('# tiny\n4 4 1\n1\n1 2\n1 2 3\n1 2 3 4\n')
    assert (instance.n, instance.m, instance.k) == (4, 4, 1)
    assert instance.ballot(3) == frozenset({1, 2, 3})


def test_parse_instance_accepts_empty_ballots_and_trailing_blank_lines():
    instance = parse_instance('3 2 1\n1\n\n2\n\n\n')
    assert instance.ballots == (frozenset({1}), frozenset(), frozenset({2}))


def test_serialize_instance_sorts_ballots(tiny):
    assert serialize_instance(tiny) == '4 4 1\n1\n1 2\n1 2 3\n1 2 3 4\n'


@pytest.mark.parametrize('seed', [7, 11, 23])
def test_serialized_random_instances_parse_back(seed):
    instance = gen_random(12, 7, 3, Fraction(2, 5), seed)
    text = serialize_instance(instance)
    assert parse_instance(text) == instance
    assert serialize_instance(parse_instance(text)) == text


@pytest.mark.parametrize('text, line_number', [
    ('4 4\n', 1),
    ('2 2 3\n1\n2\n', 1),
    ('2 2 1\n1\n3\n', 3),
    ('2 2 1\n1 1\n2\n', 2),
    ('2 2 1\n1\nx\n', 3),
    ('2 2 1\n1\n', 3),
    ('1 2 1\n1\n2\n', 3)
])
def test_parse_instance_reports_line_numbers(text, line_number):
    with pytest.raises(InstanceFormatException) as error:
        parse_instance(text)
    assert error.value.line_number == line_number
    assert str(error.value).startswith(f'Line {line_number}: ')


def test_parse_instance_requires_header():
    with pytest.raises(InstanceFormatException):
        parse_instance('# only a comment\n')


def test_write_and_read_instance(tmp_path, prop_example):
    path = write_instance(prop_example, str(tmp_path / 'nested' / 'p.abc'))
    assert read_instance(path) == prop_example


def test_read_instance_missing_file(tmp_path):
    with pytest.raises(IoException):
        read_instance(str(tmp_path / 'missing.abc'))
