from fractions import Fraction
from typing import Dict, Union


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse "p/q", an integer or a decimal literal into an exact Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    text = value.strip()
    if not text:
        raise ValueError('Empty rational value')
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as error:
        raise ValueError(f'Invalid rational value: {value!r}') from error


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def rational_to_json(value: Fraction) -> Dict[str, int]:
    return {'num': value.numerator, 'den': value.denominator}


def ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


_harmonic_values = [Fraction(0)]


def harmonic(count: int) -> Fraction:
    """H_count = 1 + 1/2 + ... + 1/count, memoized"""
    while len(_harmonic_values) <= count:
        _harmonic_values.append(
                _harmonic_values[-1] + Fraction(1, len(_harmonic_values))
            )
    return _harmonic_values[count]
