from typing import Dict, FrozenSet, List, Set, Tuple

from ..core.instance import ApprovalInstance
from ..logging import log
from .cnf import CnfFormula, is_sparse
from .exceptions import GeneratorException, PaddingBudgetException, \
        SparsityException

DEFAULT_PADDING_BUDGET = 10 ** 6
SHARED_PAIR_COPIES = 3


def _shared_pairs(
            occurrences: Dict[int, List[int]],
            split: Set[int]
        ) -> List[Tuple[int, int]]:
    """Pairs of unsplit variables that occur together in two clauses"""
    by_clauses: Dict[Tuple[int, ...], List[int]] = {}
    for variable, clauses in occurrences.items():
        if variable not in split and len(clauses) == 2:
            by_clauses.setdefault(tuple(clauses), []).append(variable)
    pairs = []
    for variables in by_clauses.values():
        for index, first in enumerate(variables):
            for second in variables[index + 1:]:
                pairs.append((first, second))
    return sorted(pairs)


def sat_to_sparse_sat(formula: CnfFormula) -> CnfFormula:
    """Rewrite a CNF formula into an equisatisfiable sparse one.

    A variable occurring in r > 2 clauses is replaced by r copies, one per
    occurrence, tied together by the cycle (x_1 ∨ ¬x_2), ..., (x_r ∨ ¬x_1).
    Two variables sharing both of their two clauses would still violate
    sparsity, so the first of every such pair is split into three copies:
    one per occurrence plus one that only appears in the cycle.

    Variables are renumbered in order of the original ids; the cycle clauses
    follow the rewritten clauses.
    """
    occurrences = formula.occurrences()
    copies: Dict[int, int] = {}
    for variable, clauses in occurrences.items():
        if len(clauses) > 2:
            copies[variable] = len(clauses)
    for first, second in _shared_pairs(occurrences, set(copies)):
        if first not in copies and second not in copies:
            copies[first] = SHARED_PAIR_COPIES
    first_id: Dict[int, int] = {}
    next_id = 1
    for variable in range(1, formula.variable_count + 1):
        first_id[variable] = next_id
        next_id += copies.get(variable, 1)
    clauses: List[FrozenSet[int]] = []
    for index, clause in enumerate(formula.clauses):
        rewritten = set()
        for literal in clause:
            variable = abs(literal)
            replacement = first_id[variable]
            if variable in copies:
                replacement += occurrences[variable].index(index)
            rewritten.add(replacement if literal > 0 else -replacement)
        clauses.append(frozenset(rewritten))
    for variable in sorted(copies):
        base = first_id[variable]
        count = copies[variable]
        for offset in range(count):
            following = base + (offset + 1) % count
            clauses.append(frozenset((base + offset, -following)))
    sparse = CnfFormula(next_id - 1, tuple(clauses))
    log.debug(
            f'Sparse rewrite: {formula.variable_count} -> '
            f'{sparse.variable_count} variables, {formula.clause_count} -> '
            f'{sparse.clause_count} clauses'
        )
    return sparse


def pad_sparse_sat(
            formula: CnfFormula,
            exponent: int,
            budget: int = DEFAULT_PADDING_BUDGET
        ) -> CnfFormula:
    """Add one clause over (n̄+m̄+1)^exponent fresh variables, where n̄ counts
    clauses and m̄ variables"""
    if exponent < 1:
        raise GeneratorException(
                f'Exponent must be positive, received {exponent}'
            )
    if formula.clause_count < 1 or formula.variable_count < 1:
        raise GeneratorException(
                'Padding requires at least one clause and one variable'
            )
    fresh = (formula.clause_count + formula.variable_count + 1) ** exponent
    if fresh > budget:
        raise PaddingBudgetException(fresh, budget)
    start = formula.variable_count + 1
    padding = frozenset(range(start, start + fresh))
    return CnfFormula(
            formula.variable_count + fresh,
            formula.clauses + (padding,)
        )


def sparse_sat_to_voting(formula: CnfFormula) -> ApprovalInstance:
    """Voting instance whose maximum JR degree is n̄+m̄ exactly when the
    formula is satisfiable, and at most n̄ otherwise.

    Candidates, in id order: c_1..c_2m̄ (c_2j-1 for x_j, c_2j for ¬x_j),
    s_1..s_n̄, t_1..t_m̄ and d. Voters, in order: groups T_1..T_m̄ and
    S_1..S_n̄ of m̄ voters each, D (n̄ voters) and D⁺ (m̄ voters). k = m̄+1.
    """
    if not is_sparse(formula):
        raise SparsityException(
                'Two variables occur together in more than one clause'
            )
    variables = formula.variable_count
    clause_count = formula.clause_count
    if variables < 1:
        raise GeneratorException('The formula must have at least one variable')
    s_base = 2 * variables
    t_base = s_base + clause_count
    d = t_base + variables + 1
    ballots: List[FrozenSet[int]] = []
    for j in range(1, variables + 1):
        ballot = frozenset((2 * j - 1, 2 * j, t_base + j))
        ballots.extend(ballot for _ in range(variables))
    for i, clause in enumerate(formula.clauses, start=1):
        ballot = {s_base + i}
        for literal in clause:
            ballot.add(2 * literal - 1 if literal > 0 else -2 * literal)
        ballots.extend(frozenset(ballot) for _ in range(variables))
    shared = frozenset(range(s_base + 1, d + 1))
    ballots.extend(shared for _ in range(clause_count))
    ballots.extend(frozenset((d,)) for _ in range(variables))
    instance = ApprovalInstance(len(ballots), d, variables + 1, tuple(ballots))
    log.debug(f'Sparse-SAT voting instance: {instance.describe()}')
    return instance
