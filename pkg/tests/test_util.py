import os
from fractions import Fraction

import pytest

from jrdegree.util.io import IoException, list_files, read_text, write_text
from jrdegree.util.prng import SplitMix64
from jrdegree.util.rationals import parse_rational, format_rational, \
    rational_to_json, ceil_div, harmonic
from jrdegree.util.timing import Timer, unit_microseconds


@pytest.mark.parametrize('text, expected', [
    ('1/2', Fraction(1, 2)),
    (' 3 ', Fraction(3)),
    ('0.25', Fraction(1, 4)),
    ('-2/4', Fraction(-1, 2))
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize('text', ['', 'x', '1/0', '1//2'])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert format_rational(Fraction(4, 2)) == '2'
    assert rational_to_json(Fraction(3, 4)) == {'num': 3, 'den': 4}


def test_ceil_div_and_harmonic():
    assert ceil_div(7, 2) == 4
    assert ceil_div(8, 2) == 4
    assert harmonic(1) == 1
    assert harmonic(3) == Fraction(11, 6)


def test_split_mix_64_reference_stream():
    stream = SplitMix64(0)
    assert stream.next_u64() == 0xE220A8397B1DCDAF
    assert stream.next_u64() == 0x6E789E6AA1B965F4
    assert stream.next_u64() == 0x06C45D188009454F


def test_split_mix_64_is_reproducible():
    first = SplitMix64(42)
    second = SplitMix64(42)
    assert [first.below(10) for _ in range(20)] == \
        [second.below(10) for _ in range(20)]
    sample = SplitMix64(7).sample(range(1, 11), 4)
    assert len(set(sample)) == 4
    assert sample == SplitMix64(7).sample(range(1, 11), 4)


def test_split_mix_64_bernoulli_extremes():
    stream = SplitMix64(3)
    assert not any(stream.bernoulli(Fraction(0)) for _ in range(50))
    assert all(stream.bernoulli(Fraction(1)) for _ in range(50))


def test_text_files(tmp_path):
    path = write_text(str(tmp_path / 'a' / 'b.txt'), 'content\n')
    assert read_text(path) == 'content\n'
    (tmp_path / 'a' / 'c.abc').write_text('')
    (tmp_path / 'a' / 'd.abc').write_text('')
    assert [os.path.basename(path) for path in
            list_files(str(tmp_path / 'a'), '.abc')] == ['c.abc', 'd.abc']
    with pytest.raises(IoException):
        list_files(str(tmp_path / 'missing'), '.abc')


def test_timer():
    with Timer() as timer:
        pass
    assert timer.get_elapsed(unit_microseconds) >= 0
