"""Constant-time profiling of a dynamic frequency array.

>>> from sprofile import Profiler
>>> p = Profiler(3)
>>> p.increment(2); p.increment(2); p.increment(1)
>>> p.mode()
ModeResult(frequency=2, objects=[2])
"""

from .events import Action, EventStream, InvalidArgument, LogEvent, add, remove
from .oracle import Oracle
from .profile import Block, InvariantError, ModeResult, Profiler
from .window import WindowedProfiler

__all__ = [
    "Action",
    "Block",
    "EventStream",
    "InvalidArgument",
    "InvariantError",
    "LogEvent",
    "ModeResult",
    "Oracle",
    "Profiler",
    "WindowedProfiler",
    "add",
    "remove",
]
