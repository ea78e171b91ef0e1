"""Degeneracy ordering and core numbers with the profile as the min-degree queue.

Vertices are objects and degrees are frequencies.  A removed vertex is walked
down to frequency -1, so all removed vertices share the bottom block and the
lowest live degree is always the first position after that block.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .events import InvalidArgument
from .profile import Profiler

DEAD = -1


class GraphFormatError(ValueError):
    def __init__(self, path, lineno: int, reason: str):
        super().__init__(f"{path}:{lineno}: {reason}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    v: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.v < 1:
            raise InvalidArgument(f"graph needs at least one vertex, got {self.v}")
        seen = set()
        for a, b in self.edges:
            if not (1 <= a <= self.v and 1 <= b <= self.v):
                raise InvalidArgument(f"edge ({a}, {b}) has an endpoint outside [1, {self.v}]")
            if a == b:
                raise InvalidArgument(f"self-loop at vertex {a}")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise InvalidArgument(f"duplicate edge ({a}, {b})")
            seen.add(e)

    @classmethod
    def from_edges(cls, edges, v: int | None = None) -> Graph:
        edges = tuple((int(a), int(b)) for a, b in edges)
        if v is None:
            v = max((max(e) for e in edges), default=1)
        return cls(v, edges)

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.v + 1)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


@dataclass(frozen=True)
class PeelResult:
    order: list[int]
    core: dict[int, int]
    degeneracy: int
    removal_degree: list[int]  # live degree of order[i] when it was removed
    decrements: int


def degeneracy_order(g: Graph) -> PeelResult:
    adj = g.adjacency()
    prof = Profiler(g.v)
    for u in range(1, g.v + 1):
        for _ in adj[u]:
            prof.increment(u)

    alive = [True] * (g.v + 1)
    order, removal_degree = [], []
    core = {}
    k = 0
    decrements = 0
    for _ in range(g.v):
        bottom = prof.block_at(1)
        pos = bottom.r + 1 if bottom.f == DEAD else 1
        d, u = prof.at(pos)
        k = max(k, d)
        core[u] = k
        order.append(u)
        removal_degree.append(d)
        alive[u] = False
        for w in adj[u]:
            if alive[w]:
                prof.decrement(w)
                decrements += 1
        for _ in range(d - DEAD):
            prof.decrement(u)
            decrements += 1
    return PeelResult(order, core, k, removal_degree, decrements)


def read_edge_list(path: str | os.PathLike) -> Graph:
    """Whitespace-separated ``a b`` pairs, one per line, optional ``p <v> <e>`` header.

    Blank lines and lines starting with ``#`` are skipped.
    """
    header = None
    edges = []
    seen = set()
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if parts[0] == "p":
                if header is not None or edges:
                    raise GraphFormatError(path, lineno, "header must come first and only once")
                if len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
                    raise GraphFormatError(path, lineno, "expected 'p <v> <e>'")
                header = (int(parts[1]), int(parts[2]))
                continue
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise GraphFormatError(path, lineno, f"expected two vertex ids, got {line.strip()!r}")
            a, b = int(parts[0]), int(parts[1])
            if a < 1 or b < 1 or (header and max(a, b) > header[0]):
                raise GraphFormatError(path, lineno, f"vertex id out of range in {line.strip()!r}")
            if a == b:
                raise GraphFormatError(path, lineno, f"self-loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise GraphFormatError(path, lineno, f"duplicate edge ({a}, {b})")
            seen.add(key)
            edges.append((a, b))
    if header is not None and header[1] != len(edges):
        raise GraphFormatError(path, lineno,
                               f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(edges, header[0] if header else None)
