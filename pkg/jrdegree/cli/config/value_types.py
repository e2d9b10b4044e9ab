from fractions import Fraction

from ...util.rationals import parse_rational


def rational(value: str) -> Fraction:
    """Value type for options given as "p/q", an integer or a decimal"""
    return parse_rational(value)


def positive_int(value: str) -> int:
    result = int(value)
    if result < 1:
        raise ValueError(f'Expected a positive integer, received {value}')
    return result
