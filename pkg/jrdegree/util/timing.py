import time


def unit_seconds(ns: int) -> float:
    return ns / 1000000000


def unit_microseconds(ns: int) -> int:
    return ns // 1000


class Timer:

    def __init__(self, start: bool = True):
        if start:
            self.start()
        else:
            self.start_time = None
        self.end_time = None

    def _capture_time(self) -> int:
        return time.monotonic_ns()

    def start(self):
        self.start_time = self._capture_time()
        self.end_time = None

    def stop(self):
        self.end_time = self._capture_time()

    def get_elapsed(self, unit=unit_seconds):
        if self.start_time is None:
            raise ValueError('Timer has not been started')
        end_time = \
            self.end_time if self.end_time is not None \
            else self._capture_time()
        return unit(end_time - self.start_time)

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.stop()
