"""Within-block inversion counters.

An inner counter is any callable taking a sequence of keys and returning the
number of strictly inverted pairs (i < j with a[i] > a[j]).  Equal keys never
count.  Two counters are provided: merge counting (O(m lg m)) and a Fenwick
tree over compressed ranks (O(m lg m)).  Both are exact, so they are
interchangeable inside the engine.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

__all__ = ["InnerCounter", "merge_count", "fenwick_count", "INNER_COUNTERS"]

InnerCounter = Callable[[Sequence[int]], int]


def merge_count(items: Sequence[int]) -> int:
    """Count strict inversions by bottom-up merge sort, taking left on ties."""
    n = len(items)
    if n < 2:
        return 0
    src = list(items)
    dst = [src[0]] * n
    total = 0
    width = 1
    while width < n:
        lo = 0
        while lo < n:
            mid = lo + width
            hi = min(lo + 2 * width, n)
            if mid >= n:
                dst[lo:n] = src[lo:n]
                break
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if src[j] < src[i]:
                    total += mid - i
                    dst[k] = src[j]
                    j += 1
                else:
                    dst[k] = src[i]
                    i += 1
                k += 1
            if i < mid:
                dst[k:hi] = src[i:mid]
            else:
                dst[k:hi] = src[j:hi]
            lo = hi
        src, dst = dst, src
        width *= 2
    return total


def fenwick_count(items: Sequence[int]) -> int:
    """Count strict inversions with a Fenwick tree over compressed key ranks.

    Scans right to left, counting previously seen keys strictly smaller than
    the current one.
    """
    m = len(items)
    if m < 2:
        return 0
    ranks = {key: i + 1 for i, key in enumerate(sorted(set(items)))}
    size = len(ranks)
    tree = [0] * (size + 1)
    total = 0
    for key in reversed(items):
        i = ranks[key] - 1
        while i > 0:
            total += tree[i]
            i -= i & -i
        i = ranks[key]
        while i <= size:
            tree[i] += 1
            i += i & -i
    return total


INNER_COUNTERS: dict[str, InnerCounter] = {
    "merge": merge_count,
    "fenwick": fenwick_count,
}
