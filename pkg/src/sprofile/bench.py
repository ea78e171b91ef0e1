"""Timed update+query loops, oracle verification and CSV records.

Each benchmark cell runs one compiled loop that applies an event and answers
the query after every event.  Stream generation, state allocation and JIT
compilation all happen before the clock starts.
"""

from __future__ import annotations

import csv
import os
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from ._jit import kernel
from ._kernels import decrement, increment
from .baselines import IndexedHeap, OrderStatisticTree, max_heap_update, min_heap_update, ost_kth, ost_update
from .events import InvalidArgument, as_codes
from .oracle import Oracle
from .profile import Profiler
from .streamgen import PRESETS, generate, preset

IMPLS = ("sprofile", "heap", "ost", "noop")
QUERIES = ("mode", "min", "median")
SUPPORTED = {
    "sprofile": {"mode", "min", "median"},
    "heap": {"mode", "min"},
    "ost": {"mode", "min", "median"},
    "noop": {"mode", "min", "median"},
}
CSV_HEADER = ("impl", "query", "preset", "n", "m", "seed", "elapsed_seconds", "updates_per_second")


@dataclass(frozen=True)
class BenchRecord:
    impl: str
    query: str
    preset: str
    n: int
    m: int
    seed: int
    elapsed_seconds: float
    updates_per_second: float = field(init=False)
    checksum: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        rate = self.n / self.elapsed_seconds if self.elapsed_seconds > 0 else float("inf")
        object.__setattr__(self, "updates_per_second", rate)

    def row(self) -> list:
        d = asdict(self)
        return [d[k] for k in CSV_HEADER]


class BenchError(RuntimeError):
    pass


def query_rank(query: str, m: int) -> int:
    """1-based sorted position the query reads (ascending order)."""
    if query == "mode":
        return m
    if query == "min":
        return 1
    if query == "median":
        return (m + 1) // 2
    raise InvalidArgument(f"unknown query {query!r}; expected one of {QUERIES}")


@kernel
def _loop_sprofile(codes, qpos, ftot, ttof, ptrb, bl, br, bf, pool, meta):
    acc = 0
    obj = 0
    for c in codes:
        if c > 0:
            increment(c - 1, ftot, ttof, ptrb, bl, br, bf, pool, meta)
        else:
            decrement(-c - 1, ftot, ttof, ptrb, bl, br, bf, pool, meta)
        acc += bf[ptrb[qpos]]
        obj ^= ttof[qpos]
    return acc, obj


@kernel
def _loop_max_heap(codes, heap, pos, freq):
    acc = 0
    obj = 0
    for c in codes:
        if c > 0:
            max_heap_update(c - 1, 1, heap, pos, freq)
        else:
            max_heap_update(-c - 1, -1, heap, pos, freq)
        top = heap[0]
        acc += freq[top]
        obj ^= top
    return acc, obj


@kernel
def _loop_min_heap(codes, heap, pos, freq):
    acc = 0
    obj = 0
    for c in codes:
        if c > 0:
            min_heap_update(c - 1, 1, heap, pos, freq)
        else:
            min_heap_update(-c - 1, -1, heap, pos, freq)
        top = heap[0]
        acc += freq[top]
        obj ^= top
    return acc, obj


@kernel
def _loop_ost(codes, rank, key, pri, left, right, size, meta, spine):
    acc = 0
    obj = 0
    for c in codes:
        if c > 0:
            ost_update(c - 1, 1, key, pri, left, right, size, meta, spine)
        else:
            ost_update(-c - 1, -1, key, pri, left, right, size, meta, spine)
        k = key[ost_kth(rank, left, right, size, meta)]
        acc += k >> 32
        obj ^= k & 0xFFFFFFFF
    return acc, obj


@kernel
def _loop_noop(codes):
    acc = 0
    obj = 0
    for c in codes:
        acc += c
        obj ^= c
    return acc, obj


def _prepare(impl: str, query: str, m: int, codes: np.ndarray):
    """Fresh state and a zero-argument callable running the timed loop."""
    rank = query_rank(query, m)
    if impl == "sprofile":
        p = Profiler(m)
        return lambda: _loop_sprofile(codes, rank - 1, *p.state)
    if impl == "heap":
        if query == "median":
            raise InvalidArgument("heap answers only mode and min queries")
        h = IndexedHeap(m, largest=(query == "mode"))
        loop = _loop_max_heap if query == "mode" else _loop_min_heap
        return lambda: loop(codes, h.heap, h.pos, h.freq)
    if impl == "ost":
        t = OrderStatisticTree(m)
        return lambda: _loop_ost(codes, rank, *t.arrays)
    if impl == "noop":
        return lambda: _loop_noop(codes)
    raise InvalidArgument(f"unknown impl {impl!r}; expected one of {IMPLS}")


def time_loop(impl: str, query: str, codes, m: int, repeats: int = 1) -> tuple[float, int]:
    """Best wall time over ``repeats`` fresh runs and the frequency checksum."""
    if repeats < 1:
        raise InvalidArgument(f"repeats must be positive, got {repeats}")
    codes = as_codes(codes)
    _prepare(impl, query, m, codes[:2])()  # compile outside the clock
    best = float("inf")
    checksum = None
    for _ in range(repeats):
        run = _prepare(impl, query, m, codes)
        t0 = time.perf_counter()
        acc, _ = run()
        best = min(best, time.perf_counter() - t0)
        checksum = int(acc)
    return best, checksum


def run_bench(query: str, impls, preset_name: str, n_list, m_list, seed: int = 0,
              repeats: int = 3, p_add: float = 0.7, log=None) -> list[BenchRecord]:
    for impl in impls:
        if impl not in IMPLS:
            raise InvalidArgument(f"unknown impl {impl!r}; expected one of {IMPLS}")
        if query not in SUPPORTED[impl]:
            raise InvalidArgument(f"{impl} does not support the {query} query")
    if preset_name not in PRESETS:
        raise InvalidArgument(f"unknown preset {preset_name!r}")
    records = []
    for n in n_list:
        for m in m_list:
            codes = generate(preset(preset_name, n, m, seed, p_add)).codes
            sums = {}
            for impl in impls:
                elapsed, checksum = time_loop(impl, query, codes, m, repeats)
                rec = BenchRecord(impl, query, preset_name, n, m, seed, elapsed, checksum=checksum)
                records.append(rec)
                if impl != "noop":
                    sums[impl] = checksum
                if log:
                    log(rec)
            if len(set(sums.values())) > 1:
                raise BenchError(f"query checksums disagree for n={n} m={m}: {sums}")
    return records


def write_csv(path: str | os.PathLike, records) -> None:
    """Append rows; the header is written when the file is new or empty."""
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if fresh:
            w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(rec.row())


def read_csv(path: str | os.PathLike) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


# verification against the brute-force oracle

FULL_CHECK_LIMIT = 20_000
CHECKPOINTS = 1_000
ALL_K_LIMIT = 100


def compare(prof: Profiler, oracle: Oracle, all_k: bool = True, ks=()) -> list[str]:
    """Mismatches between every profile query and the oracle."""
    bad = []
    m = prof.m
    if not np.array_equal(prof.frequencies(), oracle.F):
        bad.append("frequency array differs")
    for name, got, want in (("mode", prof.mode(), oracle.mode()),
                            ("min", prof.min_objects(), oracle.min())):
        if (got.frequency, set(got.objects)) != want:
            bad.append(f"{name}: profile {got.frequency} vs oracle {want[0]} (or tie set differs)")
    srt = oracle.sorted_frequencies()
    for k in (range(1, m + 1) if all_k else ks):
        f, x = prof.kth_largest(k)
        if f != srt[m - k] or oracle.F[x - 1] != f:
            bad.append(f"kth_largest({k}) = ({f}, {x}), oracle frequency {srt[m - k]}")
    f, x = prof.median()
    if f != oracle.median() or oracle.F[x - 1] != f:
        bad.append(f"median = ({f}, {x}), oracle {oracle.median()}")
    if prof.histogram() != oracle.histogram():
        bad.append("histogram differs")
    try:
        prof.audit(expected=oracle.F)
    except AssertionError as exc:
        bad.append(f"audit: {exc}")
    return bad


@dataclass
class VerifyReport:
    events: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_stream(events, m: int, factory=Profiler, max_failures: int = 10) -> VerifyReport:
    """Replay ``events`` into a profile and the oracle, comparing as it goes.

    Short streams are checked after every event; longer ones at evenly spaced
    checkpoints and at the end.
    """
    codes = as_codes(events)
    n = codes.shape[0]
    prof = factory(m)
    oracle = Oracle(m)
    report = VerifyReport(events=n)
    if n <= FULL_CHECK_LIMIT:
        marks = set(range(n))
    else:
        marks = set(np.linspace(0, n - 1, CHECKPOINTS).astype(int).tolist())
    all_k = m <= ALL_K_LIMIT
    ks = sorted({1, 2, m // 2 or 1, m - 1 or 1, m})
    for i, c in enumerate(codes.tolist()):
        if c > 0:
            prof.increment(c)
        else:
            prof.decrement(-c)
        oracle.apply_code(c)
        if i in marks:
            report.checks += 1
            for msg in compare(prof, oracle, all_k, ks):
                report.failures.append(f"event {i + 1}: {msg}")
            if len(report.failures) >= max_failures:
                break
    if n == 0:
        report.checks += 1
        report.failures.extend(compare(prof, oracle, all_k, ks))
    return report

