from numba import njit


def kernel(fn=None, **options):
    """``njit`` for functions that never allocate.

    Without the refcounting runtime, passing arrays between compiled
    functions costs nothing; with it, each call pays atomic increments for
    every array argument.
    """
    if fn is None:
        return lambda f: kernel(f, **options)
    return njit(fn, _nrt=False, **options)
