"""Brute-force pairwise inversion oracle.

Deliberately independent of the engine and the inner counters: it only
compares pairs.  Small inputs use a plain double loop; larger ones keep the
outer loop but vectorize the inner comparison with numpy.  Cost is quadratic,
so a soft length guard protects against accidental blowups.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

__all__ = ["brute_count"]

DEFAULT_LIMIT = 100_000

_VECTOR_CUTOFF = 64  # below this a pure loop beats numpy call overhead


def brute_count(items: Sequence[int], *, limit: int = DEFAULT_LIMIT) -> int:
    """Count pairs i < j with items[i] > items[j] by direct comparison.

    Keys must fit in signed 64-bit.  Raises ValueError when the input is
    longer than `limit` (soft quadratic-cost guard, overridable).
    """
    n = len(items)
    if n > limit:
        raise ValueError(f"brute_count guard: length {n} exceeds limit {limit}")
    if n < 2:
        return 0
    if n < _VECTOR_CUTOFF:
        total = 0
        for i in range(n - 1):
            x = items[i]
            for j in range(i + 1, n):
                if items[j] < x:
                    total += 1
        return total
    arr = np.asarray(items, dtype=np.int64)
    total = 0
    for i in range(n - 1):
        total += int(np.count_nonzero(arr[i + 1 :] < arr[i]))
    return total
