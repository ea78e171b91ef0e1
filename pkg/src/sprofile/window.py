"""Count-based sliding window over a profile.

When the window is full, the oldest event is undone by applying its opposite
action before the new event goes in, so the inner profile always describes
exactly the last ``W`` events.
"""

from __future__ import annotations

import numpy as np

from .events import EventStream, InvalidArgument, LogEvent
from .profile import ModeResult, Profiler


class WindowedProfiler:
    def __init__(self, m: int, window: int):
        if int(window) < 1:
            raise InvalidArgument(f"window size must be positive, got {window}")
        self.inner = Profiler(m)
        self.window = int(window)
        self._ring = np.zeros(self.window, dtype=np.int64)
        self._head = 0  # slot of the oldest event
        self._len = 0

    @property
    def m(self) -> int:
        return self.inner.m

    def __len__(self) -> int:
        return self._len

    def push(self, event: LogEvent) -> None:
        code = event.code
        # validate before evicting so a bad event leaves the window untouched
        self.inner._index(event.object)
        if self._len == self.window:
            self.inner.apply(LogEvent.from_code(self._ring[self._head]).inverted())
            self._ring[self._head] = code
            self._head = (self._head + 1) % self.window
        else:
            self._ring[(self._head + self._len) % self.window] = code
            self._len += 1
        self.inner.apply(event)

    def events(self) -> EventStream:
        """Buffered events, oldest first."""
        idx = (self._head + np.arange(self._len)) % self.window
        return EventStream(self._ring[idx])

    def mode(self) -> ModeResult:
        return self.inner.mode()

    def min_objects(self) -> ModeResult:
        return self.inner.min_objects()

    def median(self) -> tuple[int, int]:
        return self.inner.median()

    def top_k_objects(self, k: int) -> list[tuple[int, int]]:
        return self.inner.top_k_objects(k)

    def frequency(self, x: int) -> int:
        return self.inner.frequency(x)

    def histogram(self) -> list[tuple[int, int]]:
        return self.inner.histogram()
