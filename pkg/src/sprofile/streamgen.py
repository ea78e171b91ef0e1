"""Reproducible synthetic add/remove streams and the stream text format.

Randomness comes from splitmix64 so that a seed pins down the stream
bit-for-bit.  Per event: one uniform decides add (``u < p_add``) or remove,
then an id is drawn from the add or remove distribution.  Uniform ids take one
further uniform; normal and lognormal ids take two (Box-Muller, cosine branch)
and are rounded half-up and clamped into ``[1, m]``.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .events import EventStream, InvalidArgument

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
_MUL2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = 1.0 / 9007199254740992.0


class Kind(enum.IntEnum):
    UNIFORM = 0
    NORMAL = 1
    LOGNORMAL = 2


@dataclass(frozen=True)
class DistributionSpec:
    """Id distribution; ``mu``/``sigma`` are in id units and unused for uniform.

    For lognormal, ``mu`` and ``sigma`` are the mean and standard deviation of
    the drawn values themselves, not of the underlying normal.
    """

    kind: Kind = Kind.UNIFORM
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if self.kind is not Kind.UNIFORM and not self.sigma > 0:
            raise InvalidArgument(f"sigma must be positive, got {self.sigma}")
        if self.kind is Kind.LOGNORMAL and not self.mu > 0:
            raise InvalidArgument(f"lognormal mean must be positive, got {self.mu}")

    def params(self) -> tuple[int, float, float]:
        """Kernel parameters ``(kind, location, scale)``."""
        if self.kind is Kind.LOGNORMAL:
            s2 = math.log1p((self.sigma / self.mu) ** 2)
            return int(self.kind), math.log(self.mu) - s2 / 2, math.sqrt(s2)
        return int(self.kind), float(self.mu), float(self.sigma)


UNIFORM = DistributionSpec()


@dataclass(frozen=True)
class StreamConfig:
    n: int
    m: int
    seed: int = 0
    p_add: float = 0.7
    pos: DistributionSpec = field(default=UNIFORM)
    neg: DistributionSpec = field(default=UNIFORM)
    preset: str | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument(f"n must be non-negative, got {self.n}")
        if self.m < 1:
            raise InvalidArgument(f"m must be positive, got {self.m}")
        if not 0.0 <= self.p_add <= 1.0:
            raise InvalidArgument(f"p_add must lie in [0, 1], got {self.p_add}")
        if not -(2**63) <= self.seed < 2**64:
            raise InvalidArgument(f"seed must fit in 64 bits, got {self.seed}")


PRESETS = ("stream1", "stream2", "stream3")


def preset(name: str, n: int, m: int, seed: int = 0, p_add: float = 0.7) -> StreamConfig:
    if name == "stream1":
        pos = neg = UNIFORM
    elif name == "stream2":
        pos = DistributionSpec(Kind.NORMAL, 2 * m / 3, m / 6)
        neg = DistributionSpec(Kind.NORMAL, m / 3, m / 6)
    elif name == "stream3":
        pos = DistributionSpec(Kind.NORMAL, 4 * m / 5, m)
        neg = DistributionSpec(Kind.LOGNORMAL, 3 * m / 5, m)
    else:
        raise InvalidArgument(f"unknown preset {name!r}; expected one of {PRESETS}")
    return StreamConfig(n=n, m=m, seed=seed, p_add=p_add, pos=pos, neg=neg, preset=name)


@njit(inline="always")
def _next(state):
    state[0] += _GOLDEN
    z = state[0]
    z = (z ^ (z >> np.uint64(30))) * _MUL1
    z = (z ^ (z >> np.uint64(27))) * _MUL2
    return z ^ (z >> np.uint64(31))


@njit(inline="always")
def _uniform(state):
    return np.float64(_next(state) >> np.uint64(11)) * _INV_2_53


@njit
def _draw_id(state, m, kind, loc, scale):
    if kind == 0:
        return 1 + np.int64(_uniform(state) * m)
    u1 = _uniform(state)
    u2 = _uniform(state)
    z = math.sqrt(-2.0 * math.log(1.0 - u1)) * math.cos(2.0 * math.pi * u2)
    v = loc + scale * z
    if kind == 2:
        v = math.exp(v)
    v = math.floor(v + 0.5)
    if v < 1.0:
        return 1
    if v > m:
        return m
    return np.int64(v)


@njit
def _generate(n, m, seed, p_add, pk, ploc, pscale, nk, nloc, nscale):
    state = np.empty(1, np.uint64)
    state[0] = seed
    out = np.empty(n, np.int64)
    for i in range(n):
        if _uniform(state) < p_add:
            out[i] = _draw_id(state, m, pk, ploc, pscale)
        else:
            out[i] = -_draw_id(state, m, nk, nloc, nscale)
    return out


def generate(cfg: StreamConfig) -> EventStream:
    pk, ploc, pscale = cfg.pos.params()
    nk, nloc, nscale = cfg.neg.params()
    seed = np.uint64(cfg.seed % 2**64)
    codes = _generate(cfg.n, cfg.m, seed, cfg.p_add, pk, ploc, pscale, nk, nloc, nscale)
    return EventStream(codes)


class MalformedStream(ValueError):
    def __init__(self, path, lineno: int, line: str, reason: str):
        super().__init__(f"{path}:{lineno}: {reason}: {line!r}")
        self.path = path
        self.lineno = lineno


def format_stream(events) -> bytes:
    codes = EventStream.from_events(events).codes
    if not codes.size:
        return b""
    ids = np.abs(codes).astype(str)
    signs = np.where(codes > 0, " +", " -")
    return ("\n".join(np.char.add(ids, signs).tolist()) + "\n").encode("ascii")


def write_stream(path: str | os.PathLike, events) -> None:
    """One event per line: ``<id> +`` or ``<id> -``, LF-terminated ASCII."""
    with open(path, "wb") as fh:
        fh.write(format_stream(events))


def read_stream(path: str | os.PathLike) -> EventStream:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise MalformedStream(path, data[:exc.start].count(b"\n") + 1, "", "non-ASCII byte") from None
    if text and not text.endswith("\n"):
        raise MalformedStream(path, text.count("\n") + 1, text.rsplit("\n", 1)[-1],
                              "missing final newline")
    lines = text.split("\n")[:-1]
    codes = np.empty(len(lines), dtype=np.int64)
    for i, line in enumerate(lines):
        ident, sep, sign = line.partition(" ")
        if not sep or sign not in ("+", "-") or not ident.isdigit() or ident.startswith("0"):
            raise MalformedStream(path, i + 1, line, "expected '<id> +' or '<id> -'")
        x = int(ident)
        if x >= 2**63:
            raise MalformedStream(path, i + 1, line, "id out of range")
        codes[i] = x if sign == "+" else -x
    return EventStream(codes)
