"""Independent reference code shared by the tests."""

from __future__ import annotations

import itertools

import numpy as np

from sprofile.events import LogEvent


def blocks_of(F) -> list[tuple[int, int, int]]:
    """Maximal runs ``(l, r, f)`` (1-based) of the sorted frequency array."""
    out = []
    pos = 1
    for f, run in itertools.groupby(sorted(int(v) for v in F)):
        size = len(list(run))
        out.append((pos, pos + size - 1, f))
        pos += size
    return out


def replay(m: int, codes) -> np.ndarray:
    F = np.zeros(m, dtype=np.int64)
    for c in codes:
        F[abs(c) - 1] += 1 if c > 0 else -1
    return F


def adversarial(m: int, n: int, pattern: int) -> np.ndarray:
    """Hand-built sequences that stress block creation, deletion and merging."""
    ids = np.arange(1, m + 1)
    if pattern == 0:  # hammer one object down, then back up past everyone
        half = n // 2
        return np.r_[-np.ones(half, np.int64), np.ones(n - half, np.int64)]
    if pattern == 1:  # staircase: object i ends at frequency i, then unwinds
        up = np.concatenate([np.full(i, i) for i in ids])
        seq = np.r_[up, -up[::-1]]
        return np.resize(seq, n).astype(np.int64)
    if pattern == 2:  # alternate add/remove on rotating ids: singleton churn
        x = np.resize(ids, n // 2)
        return np.column_stack([x, -x]).ravel()[:n].astype(np.int64)
    if pattern == 3:  # everyone down together, then everyone up
        down = -np.resize(ids, n // 2)
        up = np.resize(ids[::-1], n - n // 2)
        return np.r_[down, up].astype(np.int64)
    # pattern 4: round robin adds with a heavy remove on the current mode
    seq = []
    for i in range(n):
        x = int(ids[i % m])
        seq.append(-x if i % 3 == 2 else x)
    return np.asarray(seq, dtype=np.int64)


ADVERSARIAL_PATTERNS = 5


def bucket_peel(v: int, edges) -> dict[int, int]:
    """Textbook bucket-queue core decomposition (Batagelj-Zaversnik style)."""
    adj = {u: set() for u in range(1, v + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    deg = {u: len(adj[u]) for u in adj}
    buckets = [set() for _ in range(max(deg.values(), default=0) + 1)]
    for u, d in deg.items():
        buckets[d].add(u)
    core = {}
    k = 0
    removed = set()
    for _ in range(v):
        d = next(i for i, b in enumerate(buckets) if b)
        u = min(buckets[d])
        buckets[d].remove(u)
        k = max(k, d)
        core[u] = k
        removed.add(u)
        for w in adj[u]:
            if w not in removed:
                buckets[deg[w]].remove(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
    return core


def random_graph(v: int, p: float, rng) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, v + 1) for b in range(a + 1, v + 1) if rng.random() < p]


def events(codes) -> list[LogEvent]:
    return [LogEvent.from_code(c) for c in codes]
