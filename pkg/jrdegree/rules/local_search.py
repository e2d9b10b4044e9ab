from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Tuple, Dict, Any, Union

from ..core.instance import ApprovalInstance, Committee, satisfactions
from ..logging import log
from ..util.prng import SplitMix64
from ..util.rationals import rational_to_json, format_rational, \
    parse_rational
from .exceptions import InvalidLambdaException


@dataclass(frozen=True)
class SwapRecord:
    removed: int
    added: int
    delta: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
                'removed': self.removed,
                'added': self.added,
                'delta': rational_to_json(self.delta)
            }


@dataclass
class LsPavTrace:
    threshold: Fraction
    initial: Committee
    final: Optional[Committee] = None
    swaps: List[SwapRecord] = field(default_factory=list)

    @property
    def swap_count(self) -> int:
        return len(self.swaps)

    def to_list(self) -> List[Dict[str, Any]]:
        return [swap.to_dict() for swap in self.swaps]

    def to_text(self) -> str:
        return '\n'.join(
                f'-{swap.removed} +{swap.added} '
                f'delta={format_rational(swap.delta)}'
                for swap in self.swaps
            )


def guarantee_lambda(instance: ApprovalInstance) -> Fraction:
    """1/(2k²), the polynomial-time EJR setting"""
    return Fraction(1, 2 * instance.k * instance.k)


def fpt_lambda(instance: ApprovalInstance) -> Fraction:
    """n/(k(k+1)), the starting point of the MDEJR rule"""
    return Fraction(instance.n, instance.k * (instance.k + 1))


def random_committee(instance: ApprovalInstance, seed: int) -> Committee:
    stream = SplitMix64(seed)
    return Committee(tuple(stream.sample(instance.candidates, instance.k)))


class _LocalSearch:

    def __init__(
                self,
                instance: ApprovalInstance,
                threshold: Fraction,
                initial: Committee
            ):
        self.instance = instance
        self.masks = instance.approver_masks
        # deltas are kept as integers scaled by lcm(1..k+1)
        self.scale = lcm(*range(1, instance.k + 2))
        self.units = [0] + [
                self.scale // value for value in range(1, instance.k + 2)
            ]
        self.scaled_threshold = threshold * self.scale
        self.strict = threshold == 0
        self.members = list(initial.members)
        self.satisfaction = satisfactions(instance, initial)

    def _scaled_delta(self, c_plus: int, c_minus: int) -> int:
        delta = 0
        gained = self.masks[c_plus] & ~self.masks[c_minus]
        while gained:
            low = gained & -gained
            delta += self.units[self.satisfaction[low.bit_length() - 1] + 1]
            gained ^= low
        lost = self.masks[c_minus] & ~self.masks[c_plus]
        while lost:
            low = lost & -lost
            delta -= self.units[self.satisfaction[low.bit_length() - 1]]
            lost ^= low
        return delta

    def _accepts(self, scaled_delta: int) -> bool:
        if self.strict:
            return scaled_delta > 0
        return scaled_delta >= self.scaled_threshold

    def find_swap(self) -> Optional[Tuple[int, int, int]]:
        """First accepted swap in lexicographic (c_plus, c_minus) order"""
        members = sorted(self.members)
        for c_plus in self.instance.candidates:
            if c_plus in members:
                continue
            for c_minus in members:
                scaled_delta = self._scaled_delta(c_plus, c_minus)
                if self._accepts(scaled_delta):
                    return c_plus, c_minus, scaled_delta
        return None

    def apply(self, c_plus: int, c_minus: int) -> None:
        self.members.remove(c_minus)
        self.members.append(c_plus)
        for candidate, step in ((c_plus, 1), (c_minus, -1)):
            mask = self.masks[candidate]
            while mask:
                low = mask & -mask
                self.satisfaction[low.bit_length() - 1] += step
                mask ^= low


def ls_pav(
            instance: ApprovalInstance,
            threshold: Union[Fraction, int, str],
            initial: Optional[Committee] = None,
            seed: Optional[int] = None
        ) -> Tuple[Committee, LsPavTrace]:
    """λ-LS-PAV: swap while some swap raises the PAV score by at least λ.

    The start is `initial` when given, a seeded random committee when `seed`
    is given, and {1..k} otherwise. With λ = 0 only strictly improving swaps
    are taken, so the search cannot revisit a committee.
    """
    try:
        threshold = parse_rational(threshold)
    except ValueError as error:
        raise InvalidLambdaException(str(error)) from error
    if threshold < 0:
        raise InvalidLambdaException(
                f'Lambda must be non-negative, received '
                f'{format_rational(threshold)}'
            )
    if initial is None:
        if seed is not None:
            initial = random_committee(instance, seed)
        else:
            initial = Committee(tuple(range(1, instance.k + 1)))
    initial.validate_for(instance)
    search = _LocalSearch(instance, threshold, initial)
    trace = LsPavTrace(threshold=threshold, initial=initial)
    while (swap := search.find_swap()) is not None:
        c_plus, c_minus, scaled_delta = swap
        search.apply(c_plus, c_minus)
        record = SwapRecord(
                removed=c_minus,
                added=c_plus,
                delta=Fraction(scaled_delta, search.scale)
            )
        trace.swaps.append(record)
        log.debug(
                f'LS-PAV swap {trace.swap_count}: -{c_minus} +{c_plus} '
                f'delta={format_rational(record.delta)}'
            )
    trace.final = Committee(tuple(search.members))
    return trace.final, trace
