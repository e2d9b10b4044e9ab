from dataclasses import dataclass
from enum import Enum
from math import comb, lcm
from typing import Optional, Tuple, List, NamedTuple

from ..core.instance import ApprovalInstance, Committee
from ..degree.oracles import get_evaluator
from ..logging import log
from .exceptions import BudgetExceededException, EnumerationException

DEFAULT_COMMITTEE_BUDGET = 10 ** 7
DEFAULT_CHUNK_SIZE = 2048


class SearchObjective(str, Enum):
    JR = 'jr'
    EJR = 'ejr'
    PAV = 'pav'


def unrank_committee(rank: int, m: int, k: int) -> Tuple[int, ...]:
    """The committee at position `rank` of the lexicographic order"""
    if not 0 <= rank < comb(m, k):
        raise EnumerationException(
                f'Rank {rank} is outside 0..{comb(m, k) - 1}'
            )
    members = []
    candidate = 1
    remaining = k
    while remaining > 0:
        # committees that take `candidate` next, given the prefix
        count = comb(m - candidate, remaining - 1)
        if rank < count:
            members.append(candidate)
            remaining -= 1
        else:
            rank -= count
        candidate += 1
    return tuple(members)


def next_committee(
            members: Tuple[int, ...],
            m: int
        ) -> Optional[Tuple[int, ...]]:
    k = len(members)
    items = list(members)
    index = k - 1
    while index >= 0 and items[index] == m - k + index + 1:
        index -= 1
    if index < 0:
        return None
    items[index] += 1
    for position in range(index + 1, k):
        items[position] = items[position - 1] + 1
    return tuple(items)


class CommitteeScorer:
    """Maps a member tuple to an integer objective value.

    Degrees are returned as is (None when undefined). PAV scores are scaled
    by lcm(1..k) so that comparisons stay exact and integral.
    """

    def __init__(
                self,
                instance: ApprovalInstance,
                objective: SearchObjective,
                index_limit: Optional[int] = None
            ):
        self.objective = objective
        self.evaluator = get_evaluator(instance, index_limit)
        self.scale = lcm(*range(1, instance.k + 1))
        self.units = [0] + [
                self.scale // level for level in range(1, instance.k + 1)
            ]

    def score(self, members: Tuple[int, ...]) -> Optional[int]:
        if self.objective is SearchObjective.JR:
            return self.evaluator.jr_value(members)
        if self.objective is SearchObjective.EJR:
            return self.evaluator.ejr_value(members)
        levels = self.evaluator.represented_levels(members)
        return sum(
                levels[level].bit_count() * self.units[level]
                for level in range(1, len(levels))
            )


@dataclass(frozen=True)
class SearchTask:
    """What a worker needs to evaluate chunks. With a threshold the search
    stops at the first committee reaching it; otherwise it maximizes and may
    stop early once `cap` is reached."""

    instance: ApprovalInstance
    objective: SearchObjective
    threshold: Optional[int] = None
    cap: Optional[int] = None
    index_limit: Optional[int] = None

    def create_scorer(self) -> CommitteeScorer:
        return CommitteeScorer(
                self.instance,
                self.objective,
                self.index_limit
            )


class Chunk(NamedTuple):
    index: int
    start: int
    stop: int


class ChunkResult(NamedTuple):
    index: int
    rank: Optional[int]
    members: Optional[Tuple[int, ...]]
    value: Optional[int]
    decisive: bool
    evaluated: int

    @classmethod
    def skipped(cls, chunk: Chunk) -> 'ChunkResult':
        return cls(chunk.index, None, None, None, False, 0)


def evaluate_chunk(
            task: SearchTask,
            scorer: CommitteeScorer,
            chunk: Chunk
        ) -> ChunkResult:
    instance = task.instance
    members = unrank_committee(chunk.start, instance.m, instance.k)
    best_rank = None
    best_members = None
    best_value = None
    evaluated = 0
    for rank in range(chunk.start, chunk.stop):
        value = scorer.score(members)
        evaluated += 1
        if value is not None:
            if task.threshold is not None:
                if value >= task.threshold:
                    return ChunkResult(
                            chunk.index, rank, members, value, True, evaluated
                        )
            elif best_value is None or value > best_value:
                best_rank, best_members, best_value = rank, members, value
                if task.cap is not None and value >= task.cap:
                    return ChunkResult(
                            chunk.index, rank, members, value, True, evaluated
                        )
        members = next_committee(members, instance.m)
    return ChunkResult(
            chunk.index, best_rank, best_members, best_value, False, evaluated
        )


@dataclass(frozen=True)
class SearchOutcome:
    committee: Optional[Committee]
    rank: Optional[int]
    value: Optional[int]
    enumerated: int


class CommitteeSearch:
    """Exhaustive search over the size-k committees in lexicographic order.

    The rank range is cut into chunks. With more than one worker the chunks
    are evaluated by an EnumerationPool; results are always reduced in chunk
    order, so the outcome does not depend on the worker count.
    """

    def __init__(
                self,
                instance: ApprovalInstance,
                objective: SearchObjective,
                budget: Optional[int] = None,
                workers: int = 1,
                chunk_size: int = DEFAULT_CHUNK_SIZE,
                index_limit: Optional[int] = None
            ):
        self.instance = instance
        self.objective = objective
        self.budget = budget if budget is not None \
            else DEFAULT_COMMITTEE_BUDGET
        self.workers = max(1, workers)
        self.chunk_size = chunk_size
        self.index_limit = index_limit
        self.total = comb(instance.m, instance.k)
        if self.total > self.budget:
            raise BudgetExceededException(self.total, self.budget)

    def _chunks(self, start: int) -> List[Chunk]:
        chunks = []
        for index, chunk_start in enumerate(
                    range(start, self.total, self.chunk_size)
                ):
            chunks.append(Chunk(
                    index,
                    chunk_start,
                    min(chunk_start + self.chunk_size, self.total)
                ))
        return chunks

    def _evaluate(
                self,
                task: SearchTask,
                chunks: List[Chunk]
            ) -> List[ChunkResult]:
        log.debug(
                f'Enumerating up to {self.total} committees '
                f'({self.objective.value}) in {len(chunks)} chunk(s) using '
                f'{self.workers} worker(s)'
            )
        if self.workers == 1 or len(chunks) < 2:
            scorer = task.create_scorer()
            results = []
            for chunk in chunks:
                result = evaluate_chunk(task, scorer, chunk)
                results.append(result)
                if result.decisive:
                    break
            return results
        from .pool import EnumerationPool
        with EnumerationPool(min(self.workers, len(chunks)), task) as pool:
            return pool.evaluate(chunks)

    def _outcome(
                self,
                result: Optional[ChunkResult],
                start: int,
                stop: int
            ) -> SearchOutcome:
        if result is None or result.members is None:
            return SearchOutcome(None, None, None, stop - start)
        return SearchOutcome(
                Committee(result.members),
                result.rank,
                result.value,
                stop - start
            )

    def first_at_least(self, threshold: int, start: int = 0) -> SearchOutcome:
        """First committee, from rank `start` on, whose value is at least
        `threshold`; `enumerated` counts ranks up to the hit"""
        task = SearchTask(
                self.instance,
                self.objective,
                threshold=threshold,
                index_limit=self.index_limit
            )
        results = sorted(
                self._evaluate(task, self._chunks(start)),
                key=lambda result: result.index
            )
        for result in results:
            if result.decisive:
                return self._outcome(result, start, result.rank + 1)
        return self._outcome(None, start, self.total)

    def maximize(self, cap: Optional[int] = None) -> SearchOutcome:
        """Lexicographically first committee with the largest value"""
        task = SearchTask(
                self.instance,
                self.objective,
                cap=cap,
                index_limit=self.index_limit
            )
        best = None
        stop = self.total
        for result in sorted(
                    self._evaluate(task, self._chunks(0)),
                    key=lambda result: result.index
                ):
            if result.members is not None and (
                        best is None or result.value > best.value
                    ):
                best = result
            if result.decisive:
                stop = result.rank + 1
                break
        if best is None:
            first = unrank_committee(0, self.instance.m, self.instance.k)
            return SearchOutcome(Committee(first), 0, None, stop)
        return self._outcome(best, 0, stop)
