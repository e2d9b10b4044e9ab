import json
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Tuple

from ..core.instance import Committee
from ..core.witness import CohesiveWitness
from ..util.rationals import format_rational

UNDEFINED = 'undefined'


class ReportFormat(str, Enum):
    HUMAN = 'human'
    JSON = 'json'


def get_report_format(config) -> ReportFormat:
    return ReportFormat.JSON if config.json else ReportFormat.HUMAN


def format_json(data: Any) -> str:
    """Compact JSON; key order is the insertion order of the report"""
    return json.dumps(data, separators=(',', ':'), ensure_ascii=False) + '\n'


def format_ids(ids: Iterable[int]) -> str:
    return '{' + ','.join(str(value) for value in ids) + '}'


def format_value(value: Any) -> str:
    if value is None:
        return UNDEFINED
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Committee):
        return str(value)
    if isinstance(value, CohesiveWitness):
        return format_witness(value)
    if isinstance(value, (list, tuple)):
        return format_ids(value)
    return str(value)


def format_witness(witness: CohesiveWitness) -> str:
    return (
            f'level={witness.level} '
            f'candidates={format_ids(witness.shared_candidates)} '
            f'voters={format_ids(witness.voters)} '
            f'represented={witness.represented_count} '
            f'unrepresented={format_ids(witness.unrepresented)}'
        )


def format_fields(fields: List[Tuple[str, Any]]) -> str:
    """Render "name: value" lines, skipping absent witnesses"""
    lines = []
    for name, value in fields:
        if value is None and name.endswith('witness'):
            continue
        lines.append(f'{name}: {format_value(value)}')
    return '\n'.join(lines) + '\n'


def append_block(text: str, title: str, block: Optional[str]) -> str:
    if not block:
        return text
    return text + f'{title}:\n' + ''.join(
            f'  {line}\n' for line in block.splitlines()
        )
