"""Brute-force reference: a plain frequency array, sorted on every query."""

from __future__ import annotations

import numpy as np

from .events import Action, InvalidArgument, LogEvent


class Oracle:
    def __init__(self, m: int):
        if int(m) < 1:
            raise InvalidArgument(f"m must be positive, got {m}")
        self.m = int(m)
        self.F = np.zeros(self.m, dtype=np.int64)
        self.adds = 0
        self.removes = 0

    def apply(self, event: LogEvent) -> None:
        x, action = event
        if not 1 <= x <= self.m:
            raise InvalidArgument(f"object id {x} outside [1, {self.m}]")
        if action is Action.ADD:
            self.F[x - 1] += 1
            self.adds += 1
        else:
            self.F[x - 1] -= 1
            self.removes += 1

    def apply_code(self, code: int) -> None:
        self.apply(LogEvent.from_code(code))

    def frequency(self, x: int) -> int:
        if not 1 <= x <= self.m:
            raise InvalidArgument(f"object id {x} outside [1, {self.m}]")
        return int(self.F[x - 1])

    def sorted_frequencies(self) -> np.ndarray:
        return np.sort(self.F)

    def _extreme(self, value) -> tuple[int, set[int]]:
        return int(value), set((np.flatnonzero(self.F == value) + 1).tolist())

    def mode(self) -> tuple[int, set[int]]:
        return self._extreme(self.F.max())

    def min(self) -> tuple[int, set[int]]:
        return self._extreme(self.F.min())

    def tie_class(self, f: int) -> set[int]:
        return set((np.flatnonzero(self.F == f) + 1).tolist())

    def kth_largest(self, k: int) -> int:
        if not 1 <= k <= self.m:
            raise InvalidArgument(f"k must lie in [1, {self.m}], got {k}")
        return int(self.sorted_frequencies()[self.m - k])

    def median(self) -> int:
        return int(self.sorted_frequencies()[(self.m + 1) // 2 - 1])

    def histogram(self) -> list[tuple[int, int]]:
        values, counts = np.unique(self.F, return_counts=True)
        return list(zip(values.tolist(), counts.tolist()))
