"""Log-stream events and their packed integer encoding.

A stream of ``n`` events is stored as one signed ``int64`` array: an add of
object ``x`` is ``+x`` and a remove is ``-x``.  Ids start at 1, so zero never
appears and the sign alone carries the action.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from typing import NamedTuple, overload

import numpy as np


class InvalidArgument(ValueError):
    """Raised for out-of-range ids, ranks, sizes and similar caller errors."""


class Action(enum.Enum):
    ADD = "+"
    REMOVE = "-"

    @property
    def opposite(self) -> Action:
        return Action.REMOVE if self is Action.ADD else Action.ADD


class LogEvent(NamedTuple):
    object: int
    action: Action

    @property
    def code(self) -> int:
        return self.object if self.action is Action.ADD else -self.object

    @classmethod
    def from_code(cls, code: int) -> LogEvent:
        code = int(code)
        if code > 0:
            return cls(code, Action.ADD)
        if code < 0:
            return cls(-code, Action.REMOVE)
        raise InvalidArgument("event code 0 does not encode an event")

    def inverted(self) -> LogEvent:
        return LogEvent(self.object, self.action.opposite)


def add(x: int) -> LogEvent:
    return LogEvent(x, Action.ADD)


def remove(x: int) -> LogEvent:
    return LogEvent(x, Action.REMOVE)


class EventStream(Sequence):
    """Read-only sequence of :class:`LogEvent` backed by a packed code array."""

    __slots__ = ("codes",)

    def __init__(self, codes):
        arr = np.ascontiguousarray(codes, dtype=np.int64)
        if arr.ndim != 1:
            raise InvalidArgument("event codes must be one-dimensional")
        if arr.size and not arr.all():
            raise InvalidArgument("event code 0 does not encode an event")
        arr.flags.writeable = False
        self.codes = arr

    @classmethod
    def from_events(cls, events: Iterable[LogEvent]) -> EventStream:
        if isinstance(events, EventStream):
            return events
        return cls(np.fromiter((e.code for e in events), dtype=np.int64))

    def __len__(self) -> int:
        return self.codes.shape[0]

    @overload
    def __getitem__(self, i: int) -> LogEvent: ...
    @overload
    def __getitem__(self, i: slice) -> EventStream: ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return EventStream(self.codes[i])
        return LogEvent.from_code(self.codes[i])

    def __iter__(self):
        for c in self.codes.tolist():
            yield LogEvent.from_code(c)

    def __eq__(self, other) -> bool:
        if isinstance(other, EventStream):
            return np.array_equal(self.codes, other.codes)
        if isinstance(other, Sequence):
            return len(other) == len(self) and all(a == b for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self) -> str:
        return f"EventStream(n={len(self)})"

    def max_id(self) -> int:
        return int(np.abs(self.codes).max()) if len(self) else 0

    def add_fraction(self) -> float:
        return float((self.codes > 0).mean()) if len(self) else 0.0


def as_codes(events) -> np.ndarray:
    """Packed code array for any event sequence (no copy for EventStream)."""
    if isinstance(events, EventStream):
        return events.codes
    if isinstance(events, np.ndarray):
        return np.ascontiguousarray(events, dtype=np.int64)
    return EventStream.from_events(events).codes
