"""Write counting for the update kernels.

:class:`CountingProfiler` runs the uncompiled kernel source against thin
array wrappers, so every slot write of one update is observed and classified.
The compiled and uncompiled paths share the same function body.
"""

from __future__ import annotations

import ast
import inspect
import sys
import textwrap
from collections import Counter
from dataclasses import dataclass

from .profile import Profiler

_PERMUTATION = ("ftot", "ttof")


@dataclass(frozen=True)
class OpCounts:
    creates: int = 0
    deletes: int = 0
    field_writes: int = 0  # writes to existing blocks, creation excluded
    permutation_writes: int = 0
    pointer_writes: int = 0


class _Ledger:
    def __init__(self):
        self.fresh: set[int] = set()
        self.counts = Counter()

    def reset(self):
        self.fresh.clear()
        self.counts.clear()


class _Tracked:
    __slots__ = ("arr", "name", "ledger")

    def __init__(self, arr, name, ledger):
        self.arr = arr
        self.name = name
        self.ledger = ledger

    @property
    def shape(self):
        return self.arr.shape

    def __getitem__(self, i):
        v = self.arr[i]
        if self.name == "pool":
            # the kernels read the pool only when taking a block off it
            self.ledger.fresh.add(int(v))
            self.ledger.counts["creates"] += 1
        return v

    def __setitem__(self, i, v):
        c = self.ledger.counts
        if self.name in _PERMUTATION:
            c["permutation_writes"] += 1
        elif self.name == "ptrb":
            c["pointer_writes"] += 1
        elif self.name == "pool":
            c["deletes"] += 1
        elif self.name in ("bl", "br", "bf"):
            if int(i) not in self.ledger.fresh:
                c["field_writes"] += 1
        self.arr[i] = v


_NAMES = ("ftot", "ttof", "ptrb", "bl", "br", "bf", "pool", "meta")


class CountingProfiler(Profiler):
    """Profiler whose updates record an :class:`OpCounts` in ``last``."""

    def __init__(self, m: int):
        super().__init__(m)
        self._ledger = _Ledger()
        self._tracked = tuple(_Tracked(a, n, self._ledger) for n, a in zip(_NAMES, self.state))
        self.last = OpCounts()

    def _run(self, fn, x):
        self._ledger.reset()
        fn.py_func(self._index(x), *self._tracked)
        self.last = OpCounts(**self._ledger.counts)

    def increment(self, x: int) -> None:
        self._run(self._kernels.increment, x)

    def decrement(self, x: int) -> None:
        self._run(self._kernels.decrement, x)


def loop_constructs(fn) -> list[str]:
    """Names of loop or comprehension nodes in ``fn``'s source (empty if none)."""
    tree = ast.parse(textwrap.dedent(inspect.getsource(getattr(fn, "py_func", fn))))
    kinds = (ast.For, ast.While, ast.AsyncFor, ast.ListComp, ast.SetComp,
             ast.DictComp, ast.GeneratorExp)
    return [type(n).__name__ for n in ast.walk(tree) if isinstance(n, kinds)]


def max_line_hits(fn, *args) -> int:
    """Run ``fn.py_func(*args)`` and return the most times any line executed."""
    code = getattr(fn, "py_func", fn).__code__
    hits = Counter()

    def tracer(frame, event, arg):
        if frame.f_code is not code:
            return None
        if event == "line":
            hits[frame.f_lineno] += 1
        return tracer

    old = sys.gettrace()
    sys.settrace(tracer)
    try:
        getattr(fn, "py_func", fn)(*args)
    finally:
        sys.settrace(old)
    return max(hits.values(), default=0)
