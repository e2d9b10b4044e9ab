from dataclasses import dataclass
from typing import Optional, Dict, Any

from ..core.instance import Committee
from ..rules.local_search import LsPavTrace


@dataclass(frozen=True)
class SolverResult:
    rule: str
    committee: Committee
    jr_degree: Optional[int]
    ejr_degree: Optional[int]
    c_max_proven: bool
    enumerated: int
    extended_loop_bound: bool = False
    collapsed: bool = False
    trace: Optional[LsPavTrace] = None

    def to_dict(self, include_trace: bool = False) -> Dict[str, Any]:
        data = {
                'rule': self.rule,
                'committee': self.committee.to_list(),
                'jr_degree': self.jr_degree,
                'ejr_degree': self.ejr_degree,
                'c_max_proven': self.c_max_proven,
                'enumerated': self.enumerated,
                'extended_loop_bound': self.extended_loop_bound,
                'collapsed': self.collapsed
            }
        if include_trace and self.trace is not None:
            data['trace'] = self.trace.to_list()
        return data
