"""Comparison structures: an indexed binary heap and an order-statistic treap.

Both hold all ``m`` objects permanently and re-position one object per event
in O(log m), which is what the block-set profile is measured against.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._jit import kernel

from .events import Action, InvalidArgument, LogEvent

NIL = 0
_SHIFT = 32


def make_heap_kernel(largest: bool):
    sign = 1 if largest else -1

    def heap_update(x, delta, heap, pos, freq):
        m = heap.shape[0]
        fx = freq[x] + delta
        freq[x] = fx
        kx = sign * fx
        i = pos[x]
        if sign * delta > 0:
            while i > 0:
                p = (i - 1) >> 1
                y = heap[p]
                if sign * freq[y] >= kx:
                    break
                heap[i] = y
                pos[y] = i
                i = p
        else:
            while True:
                c = 2 * i + 1
                if c >= m:
                    break
                kc = sign * freq[heap[c]]
                if c + 1 < m:
                    k2 = sign * freq[heap[c + 1]]
                    if k2 > kc:
                        c += 1
                        kc = k2
                if kc <= kx:
                    break
                y = heap[c]
                heap[i] = y
                pos[y] = i
                i = c
        heap[i] = x
        pos[x] = i

    return kernel(heap_update)


max_heap_update = make_heap_kernel(True)
min_heap_update = make_heap_kernel(False)


class IndexedHeap:
    """Binary heap over all objects with a position map for in-place rekeying.

    ``largest=True`` keeps the maximum frequency at the root (mode queries);
    ``largest=False`` keeps the minimum there.
    """

    def __init__(self, m: int, largest: bool = True):
        if int(m) < 1:
            raise InvalidArgument(f"m must be positive, got {m}")
        self.m = int(m)
        self.largest = largest
        self.heap = np.arange(self.m, dtype=np.int32)
        self.pos = np.arange(self.m, dtype=np.int32)
        self.freq = np.zeros(self.m, dtype=np.int64)
        self._update = max_heap_update if largest else min_heap_update

    def apply(self, event: LogEvent) -> None:
        x, action = event
        if not 1 <= x <= self.m:
            raise InvalidArgument(f"object id {x} outside [1, {self.m}]")
        delta = 1 if action is Action.ADD else -1
        self._update(x - 1, delta, self.heap, self.pos, self.freq)

    def peek(self) -> tuple[int, int]:
        """Root as ``(object, frequency)``."""
        x = int(self.heap[0])
        return x + 1, int(self.freq[x])

    def audit(self) -> None:
        if not np.array_equal(self.pos[self.heap], np.arange(self.m)):
            raise AssertionError("heap and position map are not inverse")
        keys = self.freq[self.heap]
        if not self.largest:
            keys = -keys
        children = np.arange(1, self.m)
        if (keys[(children - 1) // 2] < keys[children]).any():
            raise AssertionError("heap order violated")


@kernel
def _attach(parent, go_right, node, left, right):
    if go_right:
        right[parent] = node
    else:
        left[parent] = node


@kernel
def _refresh(node, left, right, size):
    size[node] = 1 + size[left[node]] + size[right[node]]


@kernel
def _merge(a, b, left, right, size, pri):
    """Join treaps ``a`` and ``b`` where every key in ``a`` precedes ``b``."""
    if a == NIL:
        return b
    if b == NIL:
        return a
    root = NIL
    parent = NIL
    go_right = False
    while a != NIL and b != NIL:
        if pri[a] > pri[b]:
            size[a] += size[b]
            if parent == NIL:
                root = a
            else:
                _attach(parent, go_right, a, left, right)
            parent = a
            go_right = True
            a = right[a]
        else:
            size[b] += size[a]
            if parent == NIL:
                root = b
            else:
                _attach(parent, go_right, b, left, right)
            parent = b
            go_right = False
            b = left[b]
    _attach(parent, go_right, a if a != NIL else b, left, right)
    return root


@kernel
def _split(t, k, key, left, right, size, spine):
    """Split ``t`` into keys below ``k`` and keys above it; returns both roots."""
    lroot = NIL
    rroot = NIL
    ltail = NIL
    rtail = NIL
    depth = 0
    while t != NIL:
        spine[depth] = t
        depth += 1
        if key[t] < k:
            if ltail == NIL:
                lroot = t
            else:
                right[ltail] = t
            ltail = t
            t = right[t]
        else:
            if rtail == NIL:
                rroot = t
            else:
                left[rtail] = t
            rtail = t
            t = left[t]
    if ltail != NIL:
        right[ltail] = NIL
    if rtail != NIL:
        left[rtail] = NIL
    # every touched node sits on one of the two cut spines; fix sizes bottom-up
    for j in range(depth - 1, -1, -1):
        _refresh(spine[j], left, right, size)
    return lroot, rroot


@kernel
def ost_update(x, delta, key, pri, left, right, size, meta, spine):
    """Move object ``x`` (0-based) to frequency ``freq + delta``."""
    u = x + 1
    k = key[u]
    # erase u
    parent = NIL
    go_right = False
    t = meta[0]
    while t != u:
        size[t] -= 1
        parent = t
        go_right = k > key[t]
        t = right[t] if go_right else left[t]
    joined = _merge(left[u], right[u], left, right, size, pri)
    if parent == NIL:
        meta[0] = joined
    else:
        _attach(parent, go_right, joined, left, right)
    # reinsert u under its new key
    k = k + (delta << _SHIFT)
    key[u] = k
    parent = NIL
    t = meta[0]
    while t != NIL and pri[t] > pri[u]:
        size[t] += 1
        parent = t
        go_right = k > key[t]
        t = right[t] if go_right else left[t]
    lo, hi = _split(t, k, key, left, right, size, spine)
    left[u] = lo
    right[u] = hi
    _refresh(u, left, right, size)
    if parent == NIL:
        meta[0] = u
    else:
        _attach(parent, go_right, u, left, right)


@kernel
def ost_kth(k, left, right, size, meta):
    """Node holding the ``k``-th smallest key (1-based)."""
    t = meta[0]
    while True:
        ls = size[left[t]]
        if k <= ls:
            t = left[t]
        elif k == ls + 1:
            return t
        else:
            k -= ls + 1
            t = right[t]


@njit
def _build(pri, left, right, size, stack):
    """Cartesian tree over nodes 1..m already in key order."""
    n = pri.shape[0] - 1
    sp = 0
    for i in range(1, n + 1):
        last = NIL
        while sp > 0 and pri[stack[sp - 1]] < pri[i]:
            sp -= 1
            last = stack[sp]
        left[i] = last
        if sp > 0:
            right[stack[sp - 1]] = i
        stack[sp] = i
        sp += 1
    root = stack[0]
    # preorder into stack, then sizes in reverse preorder
    order = 0
    stack2 = np.empty(n, np.int64)
    sp = 0
    stack2[sp] = root
    sp += 1
    while sp > 0:
        sp -= 1
        t = stack2[sp]
        stack[order] = t
        order += 1
        if left[t] != NIL:
            stack2[sp] = left[t]
            sp += 1
        if right[t] != NIL:
            stack2[sp] = right[t]
            sp += 1
    for j in range(n - 1, -1, -1):
        _refresh(stack[j], left, right, size)
    return root


class OrderStatisticTree:
    """Treap keyed by ``(frequency, object)`` with subtree sizes.

    Node ``x`` always belongs to object ``x``; an update erases the node,
    re-keys it and inserts it again.
    """

    def __init__(self, m: int, seed: int = 0):
        if int(m) < 1:
            raise InvalidArgument(f"m must be positive, got {m}")
        m = int(m)
        self.m = m
        self.key = np.zeros(m + 1, dtype=np.int64)
        self.key[1:] = np.arange(m)
        self.pri = np.random.default_rng(seed).integers(1, 2**62, size=m + 1, dtype=np.int64)
        self.pri[NIL] = -1
        self.left = np.zeros(m + 1, dtype=np.int32)
        self.right = np.zeros(m + 1, dtype=np.int32)
        self.size = np.zeros(m + 1, dtype=np.int32)
        self.spine = np.zeros(m + 1, dtype=np.int32)
        self.meta = np.zeros(1, dtype=np.int64)
        self.meta[0] = _build(self.pri, self.left, self.right, self.size, self.spine)

    @property
    def arrays(self) -> tuple:
        return (self.key, self.pri, self.left, self.right, self.size, self.meta, self.spine)

    def apply(self, event: LogEvent) -> None:
        x, action = event
        if not 1 <= x <= self.m:
            raise InvalidArgument(f"object id {x} outside [1, {self.m}]")
        ost_update(x - 1, 1 if action is Action.ADD else -1, *self.arrays)

    def kth(self, k: int) -> tuple[int, int]:
        """``(frequency, object)`` of the ``k``-th smallest entry."""
        if not 1 <= k <= self.m:
            raise InvalidArgument(f"k must lie in [1, {self.m}], got {k}")
        t = ost_kth(k, self.left, self.right, self.size, self.meta)
        v = int(self.key[t])
        return v >> _SHIFT, (v & ((1 << _SHIFT) - 1)) + 1

    def median(self) -> tuple[int, int]:
        return self.kth((self.m + 1) // 2)

    def frequency(self, x: int) -> int:
        return int(self.key[x]) >> _SHIFT

    def inorder(self) -> list[int]:
        out, stack, t = [], [], int(self.meta[0])
        while stack or t:
            while t:
                stack.append(t)
                t = int(self.left[t])
            t = stack.pop()
            out.append(t)
            t = int(self.right[t])
        return out

    def audit(self) -> None:
        nodes = self.inorder()
        if len(nodes) != self.m or len(set(nodes)) != self.m:
            raise AssertionError("tree does not hold exactly m entries")
        keys = self.key[nodes]
        if (np.diff(keys) <= 0).any():
            raise AssertionError("in-order keys not strictly increasing")
        idx = np.asarray(nodes)
        l, r = self.left[idx], self.right[idx]
        if not np.array_equal(self.size[idx], 1 + self.size[l] + self.size[r]):
            raise AssertionError("subtree sizes inconsistent")
        if (self.pri[l] > self.pri[idx]).any() or (self.pri[r] > self.pri[idx]).any():
            raise AssertionError("treap priority order violated")
