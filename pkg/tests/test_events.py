import numpy as np
import pytest

from sprofile.events import Action, EventStream, InvalidArgument, LogEvent, add, as_codes, remove


def test_codes_roundtrip():
    assert add(7).code == 7 and remove(7).code == -7
    assert LogEvent.from_code(-3) == remove(3)
    assert add(2).inverted() == remove(2)
    assert Action.ADD.opposite is Action.REMOVE
    with pytest.raises(InvalidArgument):
        LogEvent.from_code(0)


def test_event_stream_sequence_protocol():
    s = EventStream([3, -1, 2])
    assert len(s) == 3
    assert s[1] == remove(1)
    assert list(s[1:]) == [remove(1), add(2)]
    assert s == [add(3), remove(1), add(2)]
    assert EventStream.from_events(list(s)) == s
    assert s.max_id() == 3
    assert np.shares_memory(as_codes(s), s.codes)
    with pytest.raises(ValueError):
        s.codes[0] = 5


def test_event_stream_rejects_zero():
    with pytest.raises(InvalidArgument):
        EventStream([1, 0])
