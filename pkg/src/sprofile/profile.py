"""Block-set profile of a dynamic frequency array.

Objects ``1..m`` carry integer frequencies that move by exactly one per event.
The profile keeps the frequencies in sorted order implicitly: the sorted
array is cut into maximal runs of equal values (blocks), every sorted position
points at its block, and two inverse permutations translate between object
ids and sorted positions.  One add or remove touches a constant number of
slots, so mode, minimum, k-th largest and median are all read in O(1).

Public ids and positions are 1-based; the arrays underneath are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numba import njit

from . import _kernels
from .events import Action, InvalidArgument, LogEvent, as_codes

MAX_OBJECTS = 2**31 - 1


class Block(NamedTuple):
    l: int
    r: int
    f: int

    @property
    def size(self) -> int:
        return self.r - self.l + 1


@dataclass(frozen=True)
class ModeResult:
    frequency: int
    objects: list[int]


class InvariantError(AssertionError):
    """The profile's internal arrays are inconsistent."""


@dataclass(frozen=True)
class AuditReport:
    m: int
    pointer_slots: int
    live_blocks: int
    net_count: int


def _check_m(m) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise InvalidArgument(f"m must be an integer, got {m!r}")
    m = int(m)
    if not 1 <= m <= MAX_OBJECTS:
        raise InvalidArgument(f"m must lie in [1, {MAX_OBJECTS}], got {m}")
    return m


class Profiler:
    """Exact O(1)-per-update profile of ``m`` object frequencies.

    Not thread-safe: a single writer may mutate it, and queries must not
    overlap with an update.
    """

    _kernels = _kernels.KERNELS

    def __init__(self, m: int):
        m = _check_m(m)
        idx = np.dtype(_kernels.INDEX_DTYPE)
        self.m = m
        self._ftot = np.arange(m, dtype=idx)
        self._ttof = np.arange(m, dtype=idx)
        self._ptrb = np.zeros(m, dtype=idx)
        self._bl = np.zeros(m, dtype=idx)
        self._br = np.zeros(m, dtype=idx)
        self._bf = np.zeros(m, dtype=_kernels.FREQ_DTYPE)
        self._br[0] = m - 1
        # block 0 is the initial all-zero block; ids 1..m-1 are free
        self._pool = np.arange(m - 1, -1, -1, dtype=idx)
        self._meta = np.array([m - 1, 0], dtype=np.int64)

    @property
    def state(self) -> tuple:
        """Kernel argument tuple, in ``_kernels`` order."""
        return (self._ftot, self._ttof, self._ptrb, self._bl, self._br,
                self._bf, self._pool, self._meta)

    def _index(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise InvalidArgument(f"object id must be an integer, got {x!r}")
        if not 1 <= x <= self.m:
            raise InvalidArgument(f"object id {x} outside [1, {self.m}]")
        return int(x) - 1

    # updates

    def increment(self, x: int) -> None:
        self._kernels.increment(self._index(x), *self.state)

    def decrement(self, x: int) -> None:
        self._kernels.decrement(self._index(x), *self.state)

    def apply(self, event: LogEvent) -> None:
        x, action = event
        if action is Action.ADD:
            self.increment(x)
        elif action is Action.REMOVE:
            self.decrement(x)
        else:
            raise InvalidArgument(f"unknown action {action!r}")

    def apply_many(self, events) -> None:
        """Replay a whole stream in one compiled loop."""
        codes = as_codes(events)
        if codes.size:
            lo, hi = int(codes.min()), int(codes.max())
            if max(hi, -lo) > self.m or not codes.all():
                raise InvalidArgument(f"stream holds ids outside [1, {self.m}]")
            self._kernels.apply_codes(codes, *self.state)

    # queries

    @property
    def net_count(self) -> int:
        return int(self._meta[1])

    @property
    def live_blocks(self) -> int:
        return self.m - int(self._meta[0])

    @property
    def ftot(self) -> tuple[int, ...]:
        return tuple((self._ftot + 1).tolist())

    @property
    def ttof(self) -> tuple[int, ...]:
        return tuple((self._ttof + 1).tolist())

    def frequency(self, x: int) -> int:
        i = self._index(x)
        return int(self._bf[self._ptrb[self._ftot[i]]])

    def frequencies(self) -> np.ndarray:
        """Frequency array ``F`` with ``F[x - 1]`` the frequency of ``x``."""
        return self._bf[self._ptrb[self._ftot]]

    def sorted_frequencies(self) -> np.ndarray:
        return self._bf[self._ptrb]

    def block_at(self, pos: int) -> Block:
        if not 1 <= pos <= self.m:
            raise InvalidArgument(f"position {pos} outside [1, {self.m}]")
        b = self._ptrb[pos - 1]
        return Block(int(self._bl[b]) + 1, int(self._br[b]) + 1, int(self._bf[b]))

    def at(self, pos: int) -> tuple[int, int]:
        """``(frequency, object)`` at 1-based sorted position ``pos``."""
        if not 1 <= pos <= self.m:
            raise InvalidArgument(f"position {pos} outside [1, {self.m}]")
        i = pos - 1
        return int(self._bf[self._ptrb[i]]), int(self._ttof[i]) + 1

    def _tie_class(self, i: int) -> ModeResult:
        b = self._ptrb[i]
        objs = self._ttof[self._bl[b]:self._br[b] + 1] + 1
        return ModeResult(int(self._bf[b]), objs.tolist())

    def mode(self) -> ModeResult:
        return self._tie_class(self.m - 1)

    def min_objects(self) -> ModeResult:
        return self._tie_class(0)

    def kth_largest(self, k: int) -> tuple[int, int]:
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= self.m:
            raise InvalidArgument(f"k must lie in [1, {self.m}], got {k!r}")
        i = self.m - int(k)
        return int(self._bf[self._ptrb[i]]), int(self._ttof[i]) + 1

    def median(self) -> tuple[int, int]:
        """Lower median over all ``m`` frequencies."""
        return self.at((self.m + 1) // 2)

    def top_k_objects(self, k: int) -> list[tuple[int, int]]:
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= self.m:
            raise InvalidArgument(f"k must lie in [1, {self.m}], got {k!r}")
        pos = np.arange(self.m - 1, self.m - 1 - int(k), -1)
        objs = (self._ttof[pos] + 1).tolist()
        freqs = self._bf[self._ptrb[pos]].tolist()
        return list(zip(objs, freqs))

    def blocks(self) -> list[Block]:
        """Blocks in ascending frequency order, found by hopping ``r + 1``."""
        out = []
        bl, br, bf, ptrb = self._bl, self._br, self._bf, self._ptrb
        i = 0
        while i < self.m:
            b = ptrb[i]
            r = int(br[b])
            out.append(Block(int(bl[b]) + 1, r + 1, int(bf[b])))
            i = r + 1
        return out

    def histogram(self) -> list[tuple[int, int]]:
        return [(b.f, b.size) for b in self.blocks()]

    def __repr__(self) -> str:
        return f"Profiler(m={self.m}, blocks={self.live_blocks}, net={self.net_count})"

    # consistency

    def audit(self, expected: np.ndarray | None = None) -> AuditReport:
        """O(m) check of every structural invariant.

        ``expected`` is an optional frequency array (object order) that the
        profile must reproduce exactly.
        """
        has_expected = expected is not None
        exp = (np.ascontiguousarray(expected, dtype=np.int64) if has_expected
               else np.zeros(0, dtype=np.int64))
        if has_expected and exp.shape != (self.m,):
            raise InvalidArgument(f"expected array must have shape ({self.m},)")
        code, live = _audit(*self.state, exp, has_expected)
        if code:
            raise InvariantError(_AUDIT_ERRORS[code])
        return AuditReport(m=self.m, pointer_slots=self._ftot.size + self._ttof.size + self._ptrb.size,
                           live_blocks=int(live), net_count=self.net_count)


_AUDIT_ERRORS = {
    1: "index array entry out of range",
    2: "ftot and ttof are not inverse permutations",
    3: "free-list size out of range",
    4: "block pool does not split into live and free ids",
    5: "free list holds duplicates",
    6: "block bounds disagree with the positions pointing at them",
    7: "a block covers non-contiguous positions",
    8: "block frequencies are not strictly increasing",
    9: "frequency sum differs from the net count",
    10: "profile frequencies differ from the expected array",
    11: "block count differs from the number of distinct frequencies",
}


@njit
def _audit(ftot, ttof, ptrb, bl, br, bf, pool, meta, expected, has_expected):
    """Returns ``(error code, live blocks)``; code 0 means consistent."""
    m = ftot.shape[0]
    for i in range(m):
        if not (0 <= ftot[i] < m and 0 <= ttof[i] < m and 0 <= ptrb[i] < m):
            return 1, 0
    for i in range(m):
        if ttof[ftot[i]] != i:
            return 2, 0

    # walk the blocks left to right by hopping over each one
    live = np.zeros(m, np.bool_)
    n_live = 0
    total = 0
    prev = 0
    i = 0
    while i < m:
        b = ptrb[i]
        if live[b] or bl[b] != i or not (i <= br[b] < m):
            return 6, 0
        r = br[b]
        for j in range(i, r + 1):
            if ptrb[j] != b:
                return 7, 0
        if n_live > 0 and bf[b] <= prev:
            return 8, 0
        live[b] = True
        n_live += 1
        prev = bf[b]
        total += bf[b] * (r - i + 1)
        i = r + 1

    free = meta[0]
    if not 0 <= free < m:
        return 3, 0
    if n_live + free != m:
        return 4, 0
    seen = np.zeros(m, np.bool_)
    for j in range(free):
        c = pool[j]
        if not 0 <= c < m or live[c]:
            return 4, 0
        if seen[c]:
            return 5, 0
        seen[c] = True
    if total != meta[1]:
        return 9, 0

    if has_expected:
        for x in range(m):
            if bf[ptrb[ftot[x]]] != expected[x]:
                return 10, 0
        srt = np.sort(expected)
        distinct = 1
        for j in range(1, m):
            if srt[j] != srt[j - 1]:
                distinct += 1
        if distinct != n_live:
            return 11, 0
    return 0, n_live
