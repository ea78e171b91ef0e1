import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import replay
from sprofile import InvalidArgument, LogEvent, Oracle, WindowedProfiler, add


def test_window_of_one_cancels_previous():
    w = WindowedProfiler(5, 1)
    w.push(add(2))
    w.push(add(3))
    assert w.frequency(2) == 0
    assert w.frequency(3) == 1


def test_window_of_two_holds_two():
    w = WindowedProfiler(5, 2)
    for _ in range(3):
        w.push(add(2))
    assert w.frequency(2) == 2
    assert len(w) == 2


def test_empty_and_single_event_modes():
    w = WindowedProfiler(6, 3)
    assert w.mode().frequency == 0 and sorted(w.mode().objects) == [1, 2, 3, 4, 5, 6]
    w.push(add(5))
    assert w.mode().frequency == 1 and w.mode().objects == [5]


def test_bad_event_leaves_window_untouched():
    w = WindowedProfiler(3, 1)
    w.push(add(1))
    with pytest.raises(InvalidArgument):
        w.push(add(4))
    assert w.frequency(1) == 1 and list(w.events()) == [add(1)]


def test_bad_window_size():
    with pytest.raises(InvalidArgument):
        WindowedProfiler(3, 0)


@given(st.integers(1, 8), st.integers(1, 12), st.data())
def test_window_matches_oracle_over_buffer(m, window, data):
    codes = data.draw(st.lists(st.integers(1, m).flatmap(lambda x: st.sampled_from([x, -x])),
                               max_size=60))
    w = WindowedProfiler(m, window)
    for i, c in enumerate(codes):
        w.push(LogEvent.from_code(c))
        kept = codes[max(0, i + 1 - window):i + 1]
        assert w.events().codes.tolist() == kept
        o = Oracle(m)
        o.F[:] = replay(m, kept)
        mode = w.mode()
        assert (mode.frequency, set(mode.objects)) == o.mode()
        mn = w.min_objects()
        assert (mn.frequency, set(mn.objects)) == o.min()
        assert w.median()[0] == o.median()
        assert sorted(f for _, f in w.top_k_objects(m)) == sorted(o.F.tolist())
        assert w.histogram() == o.histogram()
        w.inner.audit(expected=o.F)
