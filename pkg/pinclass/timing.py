"""Per-stage wall-clock timing for the decision pipeline."""

import threading
import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field


@dataclass
class StageTimer:
    """Accumulates milliseconds spent in named stages; safe across threads."""

    timings: dict[str, float] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = (time.perf_counter() - start) * 1000.0
            with self._lock:
                self.timings[name] = self.timings.get(name, 0.0) + elapsed

    @property
    def total_ms(self) -> float:
        return sum(self.timings.values())

    def snapshot(self) -> dict[str, float]:
        with self._lock:
            return {name: round(ms, 3) for name, ms in self.timings.items()}
