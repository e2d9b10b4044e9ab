from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Any, List, Optional

from ..core.instance import ApprovalInstance, Committee, satisfactions, \
    mask_to_ids
from ..util.rationals import rational_to_json, format_rational
from .cohesion import cohesion_index
from .exceptions import OracleCapExceededException

DEFAULT_PROFILE_CANDIDATE_CAP = 24


@dataclass(frozen=True)
class ProportionalityProfile:
    values: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def levels(self) -> List[int]:
        return sorted(self.values)

    def get(self, level: int) -> Fraction:
        return self.values[level]

    def to_dict(self) -> Dict[str, Any]:
        return {
                str(level): rational_to_json(self.values[level])
                for level in self.levels
            }

    def to_text(self) -> str:
        return ' '.join(
                f'f({level})={format_rational(self.values[level])}'
                for level in self.levels
            )


def proportionality_profile(
            instance: ApprovalInstance,
            committee: Committee,
            cap: int = DEFAULT_PROFILE_CANDIDATE_CAP,
            index_limit: Optional[int] = None
        ) -> ProportionalityProfile:
    """Minimum average satisfaction of the ℓ-cohesive groups, per level.

    For an eligible T the least satisfied threshold-sized subset of N(T) is
    binding, so only those voters are averaged.
    """
    if instance.m > cap:
        raise OracleCapExceededException(
                'Candidate count exceeds the proportionality profile cap',
                instance.m,
                cap
            )
    committee.validate_for(instance)
    satisfaction = satisfactions(instance, committee)
    values: Dict[int, Fraction] = {}
    for group in cohesion_index(instance, index_limit):
        ordered = sorted(
                satisfaction[voter - 1]
                for voter in mask_to_ids(group.approvers)
            )
        average = Fraction(sum(ordered[:group.threshold]), group.threshold)
        current = values.get(group.level)
        if current is None or average < current:
            values[group.level] = average
    return ProportionalityProfile(values)
