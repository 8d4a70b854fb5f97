"""Deterministic input generators for tests and benchmarks.

All methods are seeded with the 64-bit PRNG from invcount.rng and produce the
same sequence on every platform.  Methods:

  sorted          0, 1, ..., n-1
  reverse         n-1, ..., 1, 0
  adjacent_swaps  start sorted, then `parameter` times swap a uniformly
                  random in-order adjacent pair; each swap adds exactly one
                  inversion, so the result has exactly min(parameter,
                  n*(n-1)/2) inversions.  Selection draws one value below the
                  current number of in-order positions and picks that
                  position in left-to-right order.
  window          split the sorted sequence into consecutive windows of width
                  `parameter` and shuffle each window (Fisher-Yates, high
                  index down); inversions are at most n * parameter
  uniform_random  n i.i.d. draws from an alphabet of size `parameter`
                  (2**64 means the full signed 64-bit range)
  constant        the key `parameter`, n times
"""

from __future__ import annotations

from dataclasses import dataclass

from .rng import Xorshift64Star, seed_state

__all__ = ["GenSpec", "GENERATOR_METHODS", "generate", "max_inversions"]

GENERATOR_METHODS = (
    "sorted",
    "reverse",
    "adjacent_swaps",
    "window",
    "uniform_random",
    "constant",
)

_FULL_RANGE = 1 << 64


@dataclass(frozen=True)
class GenSpec:
    """A generator request: length, method, method parameter, seed."""

    n: int
    method: str
    parameter: int = 0
    seed: int = 0

    def validate(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.method not in GENERATOR_METHODS:
            raise ValueError(
                f"unknown method {self.method!r}; expected one of {GENERATOR_METHODS}"
            )
        if self.parameter < 0:
            raise ValueError(f"parameter must be nonnegative, got {self.parameter}")
        if self.method == "window" and self.parameter < 1:
            raise ValueError("window width must be at least 1")
        if self.method == "uniform_random" and not 1 <= self.parameter <= _FULL_RANGE:
            raise ValueError("alphabet size must be in 1..2**64")
        if not 0 <= self.seed < _FULL_RANGE:
            raise ValueError("seed must fit in unsigned 64-bit")


def max_inversions(n: int) -> int:
    return n * (n - 1) // 2


def generate(spec: GenSpec) -> list[int]:
    """Produce the key sequence for spec.  Raises ValueError on a bad spec."""
    spec.validate()
    n = spec.n
    method = spec.method
    if method == "sorted":
        return list(range(n))
    if method == "reverse":
        return list(range(n - 1, -1, -1))
    if method == "constant":
        return [spec.parameter] * n
    if method == "adjacent_swaps":
        return _adjacent_swaps(n, spec.parameter, spec.seed)
    if method == "window":
        return _window(n, spec.parameter, spec.seed)
    return _uniform(n, spec.parameter, spec.seed)


def _fenwick_select(tree: list[int], m: int, rank: int) -> int:
    # smallest 1-based index whose prefix sum reaches rank; rank >= 1
    pos = 0
    bit = 1 << (m.bit_length() - 1)
    while bit:
        nxt = pos + bit
        if nxt <= m and tree[nxt] < rank:
            pos = nxt
            rank -= tree[nxt]
        bit >>= 1
    return pos  # 0-based flag position of the selected index


def _adjacent_swaps_pure(n: int, k: int, seed: int) -> list[int]:
    seq = list(range(n))
    m = n - 1
    if m <= 0 or k <= 0:
        return seq
    k = min(k, max_inversions(n))
    rng = Xorshift64Star(seed)
    # Fenwick tree over the in-order flags of positions 0..m-1, initially all 1
    tree = [0] * (m + 1)
    for i in range(1, m + 1):
        tree[i] = i & -i
    flags = [1] * m
    count = m
    done = 0
    while done < k and count > 0:
        j = rng.below(count)
        pos = _fenwick_select(tree, m, j + 1)
        seq[pos], seq[pos + 1] = seq[pos + 1], seq[pos]
        lo = pos - 1 if pos > 0 else 0
        hi = pos + 1 if pos + 1 < m else pos
        for p in range(lo, hi + 1):
            f = 1 if seq[p] < seq[p + 1] else 0
            if f != flags[p]:
                flags[p] = f
                d = 1 if f else -1
                count += d
                i = p + 1
                while i <= m:
                    tree[i] += d
                    i += i & -i
        done += 1
    return seq


def _adjacent_swaps(n: int, k: int, seed: int) -> list[int]:
    from . import _kernels

    if _kernels.HAVE_NUMBA and n >= 2 and k > 0:
        out = _kernels.adjacent_swaps_kernel(
            n, min(k, max_inversions(n)), seed_state(seed)
        )
        return [int(x) for x in out]
    return _adjacent_swaps_pure(n, k, seed)


def _window(n: int, width: int, seed: int) -> list[int]:
    seq = list(range(n))
    rng = Xorshift64Star(seed)
    for start in range(0, n, width):
        end = min(start + width, n)
        for i in range(end - start - 1, 0, -1):
            j = rng.below(i + 1)
            seq[start + i], seq[start + j] = seq[start + j], seq[start + i]
    return seq


def _uniform(n: int, alphabet: int, seed: int) -> list[int]:
    rng = Xorshift64Star(seed)
    if alphabet >= _FULL_RANGE:
        return [rng.next_i64() for _ in range(n)]
    return [rng.below(alphabet) for _ in range(n)]
