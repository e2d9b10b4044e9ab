from dataclasses import dataclass
from typing import Optional, Tuple, Dict, Any


@dataclass(frozen=True)
class CohesiveWitness:
    """An ℓ-cohesive group of exactly cohesive_threshold(ℓ) voters.

    Certifies that the committee it was computed against has a degree of at
    most `represented_count`.
    """

    level: int
    shared_candidates: Tuple[int, ...]
    voters: Tuple[int, ...]
    represented_count: int

    @property
    def unrepresented(self) -> Tuple[int, ...]:
        # unrepresented voters are listed first
        return self.voters[:len(self.voters) - self.represented_count]

    def to_dict(self) -> Dict[str, Any]:
        return {
                'level': self.level,
                'candidates': list(self.shared_candidates),
                'voters': list(self.voters),
                'represented': self.represented_count
            }


@dataclass(frozen=True)
class DegreeReport:
    """JR and EJR degree of one committee; None stands for UNDEFINED"""

    jr_degree: Optional[int] = None
    ejr_degree: Optional[int] = None
    jr_witness: Optional[CohesiveWitness] = None
    ejr_witness: Optional[CohesiveWitness] = None

    def merge(self, other: 'DegreeReport') -> 'DegreeReport':
        return DegreeReport(
                jr_degree=self.jr_degree if self.jr_degree is not None
                else other.jr_degree,
                ejr_degree=self.ejr_degree if self.ejr_degree is not None
                else other.ejr_degree,
                jr_witness=self.jr_witness or other.jr_witness,
                ejr_witness=self.ejr_witness or other.ejr_witness
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
                'jr_degree': self.jr_degree,
                'ejr_degree': self.ejr_degree,
                'jr_witness': self.jr_witness.to_dict()
                if self.jr_witness is not None else None,
                'ejr_witness': self.ejr_witness.to_dict()
                if self.ejr_witness is not None else None
            }
