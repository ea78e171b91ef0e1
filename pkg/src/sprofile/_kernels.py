"""Update kernels for the block-set profile.

The kernels are ordinary Python functions over flat arrays, compiled with
numba.  The uncompiled originals stay reachable through ``.py_func`` so the
test suite can run them against write-counting array wrappers.

Array layout (all 0-based, ``m`` slots each):

``ftot[x]``   sorted position of object ``x``
``ttof[i]``   object at sorted position ``i``
``ptrb[i]``   id of the block covering position ``i``
``bl, br, bf``  left end, right end and frequency of each block id
``pool``      free-list stack of unused block ids, ``pool[:meta[0]]``
``meta``      ``[free count, net count]``
"""

from typing import NamedTuple

from ._jit import kernel

INDEX_DTYPE = "int32"
FREQ_DTYPE = "int64"


class Kernels(NamedTuple):
    increment: object
    decrement: object
    apply_codes: object


def make_update_kernels(swap: bool = True) -> Kernels:
    """Build the increment/decrement kernels plus a bulk replay loop.

    ``swap=False`` leaves out the permutation swap and yields a deliberately
    broken profile; it exists only so verification can be mutation-tested.
    """

    def increment(x, ftot, ttof, ptrb, bl, br, bf, pool, meta):
        m = ftot.shape[0]
        rank = ftot[x]
        b = ptrb[rank]
        l = bl[b]
        r = br[b]
        f = bf[b]
        if swap:
            y = ttof[r]
            ttof[rank] = y
            ftot[y] = rank
            ttof[r] = x
            ftot[x] = r
        if l == r:
            top = meta[0]
            pool[top] = b
            meta[0] = top + 1
        else:
            br[b] = r - 1
        if r + 1 < m and bf[ptrb[r + 1]] == f + 1:
            c = ptrb[r + 1]
            bl[c] = r
            ptrb[r] = c
        else:
            top = meta[0] - 1
            meta[0] = top
            c = pool[top]
            bl[c] = r
            br[c] = r
            bf[c] = f + 1
            ptrb[r] = c
        meta[1] += 1

    def decrement(x, ftot, ttof, ptrb, bl, br, bf, pool, meta):
        rank = ftot[x]
        b = ptrb[rank]
        l = bl[b]
        r = br[b]
        f = bf[b]
        if swap:
            y = ttof[l]
            ttof[rank] = y
            ftot[y] = rank
            ttof[l] = x
            ftot[x] = l
        if l == r:
            top = meta[0]
            pool[top] = b
            meta[0] = top + 1
        else:
            bl[b] = l + 1
        if l > 0 and bf[ptrb[l - 1]] == f - 1:
            c = ptrb[l - 1]
            br[c] = l
            ptrb[l] = c
        else:
            top = meta[0] - 1
            meta[0] = top
            c = pool[top]
            bl[c] = l
            br[c] = l
            bf[c] = f - 1
            ptrb[l] = c
        meta[1] -= 1

    inc = kernel(increment)
    dec = kernel(decrement)

    @kernel
    def apply_codes(codes, ftot, ttof, ptrb, bl, br, bf, pool, meta):
        for c in codes:
            if c > 0:
                inc(c - 1, ftot, ttof, ptrb, bl, br, bf, pool, meta)
            else:
                dec(-c - 1, ftot, ttof, ptrb, bl, br, bf, pool, meta)

    return Kernels(inc, dec, apply_codes)


KERNELS = make_update_kernels()
increment, decrement = KERNELS.increment, KERNELS.decrement
