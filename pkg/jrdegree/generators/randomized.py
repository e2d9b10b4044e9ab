from fractions import Fraction
from typing import Union

from ..core.instance import ApprovalInstance
from ..util.prng import SplitMix64
from ..util.rationals import parse_rational
from .exceptions import GeneratorException


def gen_random(
            n: int,
            m: int,
            k: int,
            approval_probability: Union[Fraction, int, str],
            seed: int
        ) -> ApprovalInstance:
    """Each voter approves each candidate independently with the given
    probability. Draws are taken voter by voter, candidate by candidate, one
    per pair, from SplitMix64(seed)."""
    try:
        probability = parse_rational(approval_probability)
    except ValueError as error:
        raise GeneratorException(str(error)) from error
    if not 0 <= probability <= 1:
        raise GeneratorException(
                f'Approval probability must be in [0, 1], received '
                f'{probability}'
            )
    if n < 1 or m < 1:
        raise GeneratorException(
                f'Voter and candidate counts must be positive, received '
                f'n={n} m={m}'
            )
    if not 1 <= k <= m:
        raise GeneratorException(
                f'Committee size must be between 1 and {m}, received {k}'
            )
    stream = SplitMix64(seed)
    ballots = []
    for _ in range(n):
        ballots.append(frozenset(
                candidate for candidate in range(1, m + 1)
                if stream.bernoulli(probability)
            ))
    return ApprovalInstance(n, m, k, tuple(ballots))
