from fractions import Fraction
from typing import List, Sequence, TypeVar

T = TypeVar('T')

MASK_64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB


class SplitMix64:
    """ Portable 64-bit pseudo-random stream (splitmix64)

    The state advances by GOLDEN_GAMMA and each output is mixed with two
    xor-shift-multiply rounds. Only integer arithmetic masked to 64 bits is
    used, so a seed produces the same stream on every platform and in any
    implementation that follows the same constants. It is not suitable for
    cryptographic use.
    """

    def __init__(self, seed: int = 0):
        self.state = seed & MASK_64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK_64
        value = self.state
        value = ((value ^ (value >> 30)) * MIX_MULTIPLIER_1) & MASK_64
        value = ((value ^ (value >> 27)) * MIX_MULTIPLIER_2) & MASK_64
        return value ^ (value >> 31)

    def below(self, bound: int) -> int:
        """Integer in [0, bound) by multiply-shift range reduction"""
        if bound < 1:
            raise ValueError(f'Bound must be positive, received {bound}')
        return (self.next_u64() * bound) >> 64

    def bernoulli(self, probability: Fraction) -> bool:
        """True with exactly the given rational probability per 2**64 draws;
        one value is consumed whatever the probability"""
        value = self.next_u64()
        return value * probability.denominator \
            < probability.numerator << 64

    def sample(self, population: Sequence[T], count: int) -> List[T]:
        if not 0 <= count <= len(population):
            raise ValueError(
                    f'Cannot sample {count} items from {len(population)}'
                )
        pool = list(population)
        for index in range(count):
            chosen = index + self.below(len(pool) - index)
            pool[index], pool[chosen] = pool[chosen], pool[index]
        return pool[:count]
