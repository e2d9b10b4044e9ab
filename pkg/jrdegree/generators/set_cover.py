from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, TextIO, Tuple, Union

from ..core.instance import ApprovalInstance
from ..logging import log
from ..util.io import read_text, write_text
from .exceptions import GeneratorException, SetCoverFormatException

UNIVERSE_MULTIPLE = 9
DUMMY_FACTOR = 74


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe {1..universe_size}, subsets S_1..S_s and a budget k̄"""

    universe_size: int
    subsets: Tuple[FrozenSet[int], ...]
    budget: int

    def __post_init__(self):
        subsets = tuple(frozenset(subset) for subset in self.subsets)
        object.__setattr__(self, 'subsets', subsets)
        if self.universe_size < 1:
            raise GeneratorException(
                    f'Universe size must be positive, received '
                    f'{self.universe_size}'
                )
        if self.budget < 1:
            raise GeneratorException(
                    f'Budget must be positive, received {self.budget}'
                )
        for index, subset in enumerate(subsets, start=1):
            for element in subset:
                if not isinstance(element, int) or \
                        not 1 <= element <= self.universe_size:
                    raise GeneratorException(
                            f'Subset {index} contains unknown element '
                            f'{element!r}'
                        )

    @property
    def subset_count(self) -> int:
        return len(self.subsets)


def parse_set_cover(text: Union[str, TextIO]) -> SetCoverInstance:
    """Header "u s k̄" followed by one line of element ids per subset.

    Lines starting with "#" are comments; a blank line after the header is
    an empty subset.
    """
    if not isinstance(text, str):
        text = text.read()
    header = None
    subsets: List[FrozenSet[int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith('#'):
            continue
        if header is None:
            if not stripped:
                continue
            try:
                header = [int(token) for token in stripped.split()]
            except ValueError:
                raise SetCoverFormatException(
                        'Header values must be integers',
                        line_number
                    )
            if len(header) != 3:
                raise SetCoverFormatException(
                        'Expected a header of the form "u s k"',
                        line_number
                    )
            continue
        if len(subsets) == header[1]:
            if stripped:
                raise SetCoverFormatException(
                        f'Expected {header[1]} subsets, found more',
                        line_number
                    )
            continue
        try:
            elements = [int(token) for token in stripped.split()]
        except ValueError:
            raise SetCoverFormatException(
                    'Subset elements must be integers',
                    line_number
                )
        if len(set(elements)) != len(elements):
            raise SetCoverFormatException(
                    'Subset repeats an element',
                    line_number
                )
        subsets.append(frozenset(elements))
    if header is None:
        raise SetCoverFormatException('Missing "u s k" header')
    if len(subsets) != header[1]:
        raise SetCoverFormatException(
                f'Expected {header[1]} subsets, found {len(subsets)}'
            )
    return SetCoverInstance(header[0], tuple(subsets), header[2])


def serialize_set_cover(instance: SetCoverInstance) -> str:
    lines = [
            f'{instance.universe_size} {instance.subset_count} '
            f'{instance.budget}'
        ]
    for subset in instance.subsets:
        lines.append(' '.join(str(element) for element in sorted(subset)))
    return '\n'.join(lines) + '\n'


def read_set_cover(path: str) -> SetCoverInstance:
    return parse_set_cover(read_text(path))


def write_set_cover(instance: SetCoverInstance, path: str) -> str:
    return write_text(path, serialize_set_cover(instance))


def has_cover(instance: SetCoverInstance) -> bool:
    """Whether at most k̄ subsets cover the universe"""
    universe = (1 << instance.universe_size) - 1
    masks = []
    for subset in instance.subsets:
        mask = 0
        for element in subset:
            mask |= 1 << (element - 1)
        masks.append(mask)
    size = min(instance.budget, len(masks))
    for chosen in combinations(masks, size):
        covered = 0
        for mask in chosen:
            covered |= mask
        if covered == universe:
            return True
    return False


def set_cover_to_mdjr(instance: SetCoverInstance) -> ApprovalInstance:
    """One voter per element approving the subsets that contain it, plus as
    many voters approving every candidate; k = k̄.

    The maximum JR degree reaches n/k exactly when a cover of size k̄
    exists.
    """
    if instance.budget < 2:
        raise GeneratorException(
                f'The reduction requires a budget of at least 2, received '
                f'{instance.budget}'
            )
    if instance.budget > instance.subset_count:
        raise GeneratorException(
                f'Budget {instance.budget} exceeds the number of subsets '
                f'{instance.subset_count}'
            )
    orphans = set(range(1, instance.universe_size + 1)).difference(
            *instance.subsets
        )
    if orphans:
        # their voters belong to no cohesive group
        log.warning(
                f'Elements {sorted(orphans)} belong to no subset; the JR '
                'degree no longer separates covers from non-covers'
            )
    ballots = []
    for element in range(1, instance.universe_size + 1):
        ballots.append(frozenset(
                index for index, subset in enumerate(instance.subsets, start=1)
                if element in subset
            ))
    everything = frozenset(range(1, instance.subset_count + 1))
    ballots.extend(everything for _ in range(instance.universe_size))
    return ApprovalInstance(
            n=len(ballots),
            m=instance.subset_count,
            k=instance.budget,
            ballots=tuple(ballots)
        )


def normalize_for_mdejr(instance: SetCoverInstance) -> SetCoverInstance:
    """Apply the three normalizations the EJR reduction expects, in order.

    1. k̄ < s: empty subsets are appended until s = k̄ + 1.
    2. The universe size is padded to a multiple of 9 with elements that
       every subset contains.
    3. 74·u dummy elements are added together with one subset holding
       exactly them, and k̄ grows by one. Two original subsets then share at
       most 1/75 of the universe.
    """
    subsets = list(instance.subsets)
    budget = instance.budget
    while len(subsets) <= budget:
        subsets.append(frozenset())
    size = instance.universe_size
    padded = -(-size // UNIVERSE_MULTIPLE) * UNIVERSE_MULTIPLE
    extra = frozenset(range(size + 1, padded + 1))
    subsets = [subset | extra for subset in subsets]
    dummies = frozenset(range(padded + 1, padded * (DUMMY_FACTOR + 1) + 1))
    subsets.append(dummies)
    return SetCoverInstance(
            universe_size=padded * (DUMMY_FACTOR + 1),
            subsets=tuple(subsets),
            budget=budget + 1
        )


def set_cover_to_mdejr(instance: SetCoverInstance) -> ApprovalInstance:
    """Voting instance whose maximum EJR degree is at least 3n/(4k) exactly
    when the set-cover instance has a cover of size k̄.

    After normalization (u elements, s subsets, budget k̄) and with
    u' = 4u/3: candidates c_1..c_s, c* = s+1 and d_1..d_3 = s+2..s+4, k = k̄+3.
    Voters, in order: U (u voters, one per element, approving the subsets
    containing it and c*), U' (u/3 voters approving c*), V (k̄·u' voters
    approving c_1..c_s) and W_1..W_6 (u'/3 voters each).
    """
    normal = normalize_for_mdejr(instance)
    size = normal.universe_size
    subsets = normal.subset_count
    scaled = 4 * size // 3
    star = subsets + 1
    d1, d2, d3 = subsets + 2, subsets + 3, subsets + 4
    ballots: List[FrozenSet[int]] = []
    for element in range(1, size + 1):
        ballot = {star}
        ballot.update(
                index for index, subset in enumerate(normal.subsets, start=1)
                if element in subset
            )
        ballots.append(frozenset(ballot))
    ballots.extend(frozenset((star,)) for _ in range(size // 3))
    everything = frozenset(range(1, subsets + 1))
    ballots.extend(everything for _ in range(normal.budget * scaled))
    for ballot in (
                (d1, d3), (d1,), (d1, d2), (d2,), (d2, d3), (d3,)
            ):
        ballots.extend(frozenset(ballot) for _ in range(scaled // 3))
    voting = ApprovalInstance(
            n=len(ballots),
            m=subsets + 4,
            k=normal.budget + 3,
            ballots=tuple(ballots)
        )
    log.debug(f'Set-cover EJR instance: {voting.describe()}')
    return voting
