import numpy as np
import pytest

from sprofile import InvalidArgument, Oracle, add, remove


def test_add_and_remove():
    o = Oracle(3)
    o.apply(add(2))
    assert o.F.tolist() == [0, 1, 0]
    o.apply(remove(2))
    assert o.F.tolist() == [0, 0, 0]
    o.apply(remove(1))
    assert o.F.tolist() == [-1, 0, 0]
    assert o.F.sum() == o.adds - o.removes


def test_queries_on_small_arrays():
    o = Oracle(3)
    assert o.mode() == (0, {1, 2, 3})
    o.F[:] = [-1, 0, 2]
    assert o.kth_largest(2) == 0
    assert o.median() == 0
    assert o.min() == (-1, {1})
    assert o.histogram() == [(-1, 1), (0, 1), (2, 1)]


def test_histogram_counts_sum_to_m():
    o = Oracle(50)
    o.F[:] = np.random.default_rng(0).integers(-3, 4, 50)
    assert sum(c for _, c in o.histogram()) == 50


def test_rejects_bad_input():
    o = Oracle(2)
    with pytest.raises(InvalidArgument):
        o.apply(add(3))
    with pytest.raises(InvalidArgument):
        o.kth_largest(0)
    with pytest.raises(InvalidArgument):
        Oracle(0)
