import os
import traceback
from ctypes import c_longlong
from enum import IntEnum
from logging import Handler
from multiprocessing import Queue, Process, Value
from typing import Dict, List, Optional, Set, Tuple

from ..logging import log, remove_initial_handler
from .exceptions import EnumerationException
from .search import (
        Chunk,
        ChunkResult,
        CommitteeScorer,
        SearchTask,
        evaluate_chunk
    )

NO_CUTOFF = 2 ** 62
"""Cutoff value while no chunk has produced a decisive result"""


class ExceptionContainer(Exception):

    def __init__(self, exception: BaseException, trace: str = None):
        self.exception = exception
        if trace is None:
            self.trace = traceback.format_exc()
        else:
            self.trace = trace
        super().__init__(
                f'An exception occurred in a child process: {self.exception}'
            )

    def __reduce__(self) -> Tuple:
        return (
                self.__class__,
                (
                    self.exception,
                    self.trace
                )
            )


class EnumerationEventType(IntEnum):
    COMPLETED = 0
    CHUNK_PROCESSED = 1
    FATAL_EXCEPTION = 2
    LOG_MESSAGE = 3


class EnumerationEvent:

    def __init__(
                self,
                type: int,
                data=None,
                worker_index: Optional[int] = None
            ):
        self.type = type
        self.data = data
        self.worker_index = worker_index


class EventQueueLogHandler(Handler):

    def __init__(self, event_queue: Queue, worker_index: int):
        self._event_queue = event_queue
        self._worker_index = worker_index
        Handler.__init__(self)

    def emit(self, record):
        data = {
                'level': record.levelname,
                'message': record.getMessage()
            }
        self._event_queue.put(
            EnumerationEvent(
                EnumerationEventType.LOG_MESSAGE,
                data,
                worker_index=self._worker_index
            )
        )


def use_event_queue_log_handler(event_queue: Queue, worker_index: int) -> None:
    handler = EventQueueLogHandler(
            event_queue,
            worker_index
        )
    remove_initial_handler()
    log.addHandler(handler)


class EnumerationWorker(Process):
    """Evaluates chunks from the work queue until it reads None.

    Chunks whose index is above the shared cutoff are reported as skipped
    without being evaluated: an earlier chunk already decided the search.
    """

    def __init__(
                self,
                index: int,
                task: SearchTask,
                work_queue: Queue,
                event_queue: Queue,
                cutoff: Value,
                use_log_events: bool = True
            ):
        self.index = index
        self._task = task
        self._work_queue = work_queue
        self._event_queue = event_queue
        self._cutoff = cutoff
        self._use_log_events = use_log_events
        super().__init__(name=f'enumeration-worker-{index}')

    def _put_event(
                self,
                event_type: EnumerationEventType,
                data: dict = None
            ) -> None:
        if data is None:
            data = {}
        self._event_queue.put(
                EnumerationEvent(event_type, data, worker_index=self.index)
            )

    def _lower_cutoff(self, index: int) -> None:
        with self._cutoff.get_lock():
            if index < self._cutoff.value:
                self._cutoff.value = index

    def _process_chunk(self, scorer: CommitteeScorer, chunk: Chunk) -> None:
        if chunk.index > self._cutoff.value:
            result = ChunkResult.skipped(chunk)
        else:
            result = evaluate_chunk(self._task, scorer, chunk)
            if result.decisive:
                self._lower_cutoff(chunk.index)
        self._put_event(
                EnumerationEventType.CHUNK_PROCESSED,
                {'result': result}
            )

    def work(self) -> None:
        log.debug(f'Worker {self.index} started, PID: {os.getpid()}')
        scorer = self._task.create_scorer()
        while (chunk := self._work_queue.get()) is not None:
            self._process_chunk(scorer, chunk)

    def run(self):
        if self._use_log_events:
            use_event_queue_log_handler(self._event_queue, self.index)
        try:
            self.work()
        except BaseException as exception:
            self._put_event(
                    EnumerationEventType.FATAL_EXCEPTION,
                    {'exception': ExceptionContainer(exception)}
                )
        self._put_event(EnumerationEventType.COMPLETED)


_active_pools: Set['EnumerationPool'] = set()


def terminate_active_pools() -> None:
    for pool in list(_active_pools):
        pool.terminate()


class EnumerationPool:

    def __init__(
                self,
                size: int,
                task: SearchTask,
                use_log_events: bool = True
            ):
        self.size = size
        self._task = task
        self._use_log_events = use_log_events
        self._started = False

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        if exc_type is None:
            self.stop()
        else:
            self.terminate()

    def start(self):
        if self._started:
            raise EnumerationException(
                    'Enumeration pool has already been started'
                )
        self._work_queue = Queue()
        self._event_queue = Queue()
        self._cutoff = Value(c_longlong, NO_CUTOFF)
        self._workers = []
        for i in range(self.size):
            worker = EnumerationWorker(
                    i,
                    self._task,
                    self._work_queue,
                    self._event_queue,
                    self._cutoff,
                    self._use_log_events
                )
            worker.start()
            self._workers.append(worker)
        self._started = True
        _active_pools.add(self)

    def _assert_started(self):
        if not self._started:
            raise EnumerationException('Enumeration pool has not been started')

    def stop(self):
        self._assert_started()
        for worker in self._workers:
            worker.join()
        _active_pools.discard(self)

    def terminate(self):
        self._assert_started()
        for worker in self._workers:
            worker.terminate()
        _active_pools.discard(self)

    def evaluate(self, chunks: List[Chunk]) -> List[ChunkResult]:
        """Evaluate every chunk; one result is returned per chunk"""
        self._assert_started()
        for chunk in chunks:
            self._work_queue.put(chunk)
        for _ in range(self.size):
            self._work_queue.put(None)
        results: Dict[int, ChunkResult] = {}
        completed = 0
        while completed < self.size:
            event = self._event_queue.get()
            if event.type == EnumerationEventType.COMPLETED:
                log.debug(f'Worker {event.worker_index} completed')
                completed += 1
            elif event.type == EnumerationEventType.CHUNK_PROCESSED:
                result = event.data['result']
                results[result.index] = result
            elif event.type == EnumerationEventType.FATAL_EXCEPTION:
                self.terminate()
                raise event.data['exception']
            elif event.type == EnumerationEventType.LOG_MESSAGE:
                method = getattr(log, event.data['level'].lower())
                method(event.data['message'])
        if len(results) != len(chunks):
            raise EnumerationException(
                    f'Expected {len(chunks)} chunk result(s), received '
                    f'{len(results)}'
                )
        return [results[chunk.index] for chunk in chunks]
