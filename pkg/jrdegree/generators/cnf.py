from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, TextIO, Tuple, \
        Union

from ..util.io import read_text, write_text
from .exceptions import CnfFormatException, GeneratorException

DEFAULT_TRUTH_TABLE_VARIABLES = 20


def literal_key(literal: int) -> Tuple[int, int]:
    return abs(literal), 0 if literal > 0 else 1


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula over variables 1..variable_count.

    Clauses are sets of signed literals (v for x_v, -v for ¬x_v) and never
    contain both a variable and its negation.
    """

    variable_count: int
    clauses: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        clauses = tuple(frozenset(clause) for clause in self.clauses)
        object.__setattr__(self, 'clauses', clauses)
        if self.variable_count < 0:
            raise CnfFormatException(
                    f'Variable count cannot be negative, received '
                    f'{self.variable_count}'
                )
        for index, clause in enumerate(clauses, start=1):
            for literal in clause:
                if literal == 0 or abs(literal) > self.variable_count:
                    raise CnfFormatException(
                            f'Clause {index} contains invalid literal '
                            f'{literal}'
                        )
                if -literal in clause:
                    raise CnfFormatException(
                            f'Clause {index} contains variable {abs(literal)} '
                            'and its negation'
                        )

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> Dict[int, List[int]]:
        """Variable -> indices (0-based) of the clauses containing it"""
        found: Dict[int, List[int]] = {
                variable: [] for variable in range(1, self.variable_count + 1)
            }
        for index, clause in enumerate(self.clauses):
            for literal in clause:
                found[abs(literal)].append(index)
        return found

    def sorted_clause(self, index: int) -> List[int]:
        return sorted(self.clauses[index], key=literal_key)


def parse_dimacs(text: Union[str, TextIO]) -> CnfFormula:
    """Parse "p cnf V C" followed by 0-terminated clauses; lines starting with
    "c" are comments and clauses may span lines"""
    if not isinstance(text, str):
        text = text.read()
    header: Optional[Tuple[int, int]] = None
    clauses: List[FrozenSet[int]] = []
    pending: List[int] = []
    last_line = 0
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('c') or \
                stripped.startswith('%'):
            continue
        last_line = line_number
        if header is None:
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != 'p' or parts[1] != 'cnf':
                raise CnfFormatException(
                        'Expected a header of the form "p cnf V C"',
                        line_number
                    )
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfFormatException(
                        'Header counts must be integers',
                        line_number
                    )
            continue
        for token in stripped.split():
            try:
                literal = int(token)
            except ValueError:
                raise CnfFormatException(
                        f'Invalid literal: {token!r}',
                        line_number
                    )
            if literal == 0:
                if len(set(pending)) != len(pending):
                    raise CnfFormatException(
                            'Clause repeats a literal',
                            line_number
                        )
                clauses.append(frozenset(pending))
                pending = []
            else:
                pending.append(literal)
    if header is None:
        raise CnfFormatException('Missing "p cnf" header')
    if pending:
        raise CnfFormatException(
                'Last clause is not terminated by 0',
                last_line
            )
    if len(clauses) != header[1]:
        raise CnfFormatException(
                f'Header declares {header[1]} clauses, found {len(clauses)}'
            )
    return CnfFormula(header[0], tuple(clauses))


def serialize_dimacs(formula: CnfFormula) -> str:
    lines = [f'p cnf {formula.variable_count} {formula.clause_count}']
    for index in range(formula.clause_count):
        literals = formula.sorted_clause(index)
        lines.append(' '.join(str(literal) for literal in literals + [0]))
    return '\n'.join(lines) + '\n'


def read_dimacs(path: str) -> CnfFormula:
    return parse_dimacs(read_text(path))


def write_dimacs(formula: CnfFormula, path: str) -> str:
    return write_text(path, serialize_dimacs(formula))


def is_sparse(formula: CnfFormula) -> bool:
    """True when no two variables occur together in more than one clause"""
    seen = set()
    for clause in formula.clauses:
        variables = sorted(abs(literal) for literal in clause)
        for pair in combinations(variables, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def _clause_masks(clauses: Iterable[FrozenSet[int]]) -> List[Tuple[int, int]]:
    masks = []
    for clause in clauses:
        positive = 0
        negative = 0
        for literal in clause:
            if literal > 0:
                positive |= 1 << (literal - 1)
            else:
                negative |= 1 << (-literal - 1)
        masks.append((positive, negative))
    return masks


def is_satisfiable(
            formula: CnfFormula,
            max_variables: int = DEFAULT_TRUTH_TABLE_VARIABLES
        ) -> bool:
    """Exhaustive truth-table check; bit v-1 of an assignment is x_v"""
    if formula.variable_count > max_variables:
        raise GeneratorException(
                f'Truth tables are limited to {max_variables} variables, the '
                f'formula has {formula.variable_count}'
            )
    masks = _clause_masks(formula.clauses)
    full = (1 << formula.variable_count) - 1
    for assignment in range(1 << formula.variable_count):
        negated = full & ~assignment
        if all(assignment & positive or negated & negative
               for positive, negative in masks):
            return True
    return False
