"""Deterministic selection and stable partitioning of (key, position) items.

Items are plain tuples ordered lexicographically, so equal keys break ties by
position and the order is a strict total order whenever positions are
distinct.  Selection is the classic median-of-medians scheme with groups of
five: worst-case linear and fully deterministic.
"""

from __future__ import annotations

from collections.abc import Sequence

__all__ = ["Item", "select_rank", "stable_partition_by_rank"]

Item = tuple[int, int]  # (key, position)


def select_rank(buffer: list[Item], r: int) -> Item:
    """Return the item of rank r (1-based) under (key, position) order.

    The buffer may be permuted in place; pass a copy if order matters.
    """
    if not 1 <= r <= len(buffer):
        raise ValueError(f"rank {r} out of range 1..{len(buffer)}")
    return _select(buffer, 0, len(buffer) - 1, r - 1)


def _select(a: list[Item], lo: int, hi: int, k: int) -> Item:
    while True:
        if hi - lo < 5:
            a[lo : hi + 1] = sorted(a[lo : hi + 1])
            return a[k]
        # move each group-of-5 median to the front span lo..write-1
        write = lo
        for g in range(lo, hi + 1, 5):
            ge = min(g + 4, hi)
            a[g : ge + 1] = sorted(a[g : ge + 1])
            mid = g + (ge - g) // 2
            a[write], a[mid] = a[mid], a[write]
            write += 1
        pivot = _select(a, lo, write - 1, lo + (write - 1 - lo) // 2)
        p = _partition(a, lo, hi, pivot)
        if k == p:
            return a[p]
        if k < p:
            hi = p - 1
        else:
            lo = p + 1


def _partition(a: list[Item], lo: int, hi: int, pivot: Item) -> int:
    # items are distinct, so the pivot occurs exactly once
    pidx = a.index(pivot, lo, hi + 1)
    a[pidx], a[hi] = a[hi], a[pidx]
    store = lo
    for i in range(lo, hi):
        if a[i] < pivot:
            a[store], a[i] = a[i], a[store]
            store += 1
    a[store], a[hi] = a[hi], a[store]
    return store


def stable_partition_by_rank(
    buffer: Sequence[Item], r: int
) -> tuple[list[Item], list[Item], list[int]]:
    """Split buffer into its r smallest items and the rest, both in old order.

    Returns (first, second, pi) where first holds the items of rank 1..r,
    second the items of rank r+1..len(buffer), each preserving their relative
    order in buffer, and pi maps every old position (1-based buffer index) to
    its new position in the concatenation first + second.
    """
    m = len(buffer)
    if not 1 <= r <= m:
        raise ValueError(f"rank {r} out of range 1..{m}")
    pivot = select_rank(list(buffer), r)
    first: list[Item] = []
    second: list[Item] = []
    pi = [0] * m
    nxt_first = 1
    nxt_second = r + 1
    for i, item in enumerate(buffer):
        if item <= pivot:
            first.append(item)
            pi[i] = nxt_first
            nxt_first += 1
        else:
            second.append(item)
            pi[i] = nxt_second
            nxt_second += 1
    return first, second, pi
