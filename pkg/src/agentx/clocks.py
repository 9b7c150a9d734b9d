"""Clock abstraction: wall time for live runs, a deterministic tick clock for replay."""

from __future__ import annotations

import threading
import time


class Clock:
    """Monotonic millisecond clock."""

    def now_ms(self) -> int:
        raise NotImplementedError


class SystemClock(Clock):
    def now_ms(self) -> int:
        return time.monotonic_ns() // 1_000_000


class TickClock(Clock):
    """Deterministic clock that advances a fixed step on every read.

    Offline runs use this so that traces (timestamps, durations, billed cost)
    replay byte-identically. Thread-safe: concurrent runs may share one.
    """

    def __init__(self, start_ms: int = 0, step_ms: int = 1):
        self._now = start_ms
        self._step = step_ms
        self._lock = threading.Lock()

    def now_ms(self) -> int:
        with self._lock:
            current = self._now
            self._now += self._step
            return current
