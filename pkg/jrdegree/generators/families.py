from typing import Dict, Iterable, List, Set

from ..core.instance import ApprovalInstance
from ..logging import log
from .exceptions import GeneratorException


def instance_from_approvers(
            n: int,
            m: int,
            k: int,
            approvers: Dict[int, Iterable[int]]
        ) -> ApprovalInstance:
    """Build an instance from candidate -> approving voters"""
    ballots: List[Set[int]] = [set() for _ in range(n)]
    for candidate, voters in approvers.items():
        for voter in voters:
            ballots[voter - 1].add(candidate)
    return ApprovalInstance(n, m, k, tuple(ballots))


def gen_tiny() -> ApprovalInstance:
    """Four voters with nested ballots A_i = {c_1..c_i}, k = 1"""
    return ApprovalInstance(
            n=4,
            m=4,
            k=1,
            ballots=tuple(frozenset(range(1, i + 1)) for i in range(1, 5))
        )


def gen_prop_example() -> ApprovalInstance:
    return instance_from_approvers(9, 6, 3, {
            1: (1, 2, 3, 4, 5),
            2: (4, 5, 6, 7, 8),
            3: (7, 8, 9, 1, 2),
            4: (1, 2, 4, 5, 7, 8),
            5: (1, 2, 4, 5, 7, 8),
            6: (1, 2, 4, 5, 7, 8)
        })


def appendix_b_blocks(size: int) -> List[List[int]]:
    """Voter blocks V_1..V_{L+2} of the JR/EJR separation family.

    Every block has size² voters. Consecutive blocks V_i, V_{i+1} (i ≤ L)
    share one voter, V_{L+1} and V_{L+2} share `size` voters and V_{L+2}
    wraps around to share the first `size` voters of V_1.
    """
    if size < 2:
        raise GeneratorException(f'P must be at least 2, received {size}')
    square = size * size
    chain = 2 * square - 2 * size
    n = square * (chain + 2) - 2 * size - chain
    blocks = []
    for index in range(1, chain + 2):
        start = (index - 1) * (square - 1) + 1
        blocks.append(list(range(start, start + square)))
    tail_start = (chain + 1) * square - chain - size + 1
    blocks.append(list(range(tail_start, n + 1)) + list(range(1, size + 1)))
    return blocks


def gen_appendix_b(size: int) -> ApprovalInstance:
    """Instance whose JR-optimal and EJR-optimal committees differ widely.

    Candidates c_{2i-1} and c_{2i} are approved by block V_i.
    """
    blocks = appendix_b_blocks(size)
    chain = len(blocks) - 2
    square = size * size
    n = square * (chain + 2) - 2 * size - chain
    approvers = {}
    for index, block in enumerate(blocks, start=1):
        approvers[2 * index - 1] = block
        approvers[2 * index] = block
    instance = instance_from_approvers(
            n,
            2 * (chain + 2),
            2 * chain,
            approvers
        )
    log.debug(f'Generated separation family P={size}: {instance.describe()}')
    return instance


def gen_pav_failure(size: int) -> ApprovalInstance:
    """Instance on which the PAV winner does not maximize the EJR degree.

    Candidates are c_1..c_3p (ids 1..3p), d_1 = 3p+1 and d_2 = 3p+2. Voters
    are, in order, D_1 (3p), D_2 (3p+2), T (p) and S (9p²-p-1).
    """
    if size < 2:
        raise GeneratorException(f'p must be at least 2, received {size}')
    singles = 3 * size
    d1 = singles + 1
    d2 = singles + 2
    ballots = []
    for index in range(1, singles + 1):
        ballots.append(frozenset((d1, d2, index)))
    ballots.extend(frozenset((d1, d2)) for _ in range(singles + 2))
    for index in range(1, size + 1):
        ballots.append(frozenset(range(3 * index - 2, 3 * index + 1)))
    common = frozenset(range(1, singles + 1))
    ballots.extend(common for _ in range(9 * size * size - size - 1))
    return ApprovalInstance(
            n=len(ballots),
            m=singles + 2,
            k=singles + 1,
            ballots=tuple(ballots)
        )
