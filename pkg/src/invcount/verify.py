"""Cross-check helpers shared by cmd_verify and the acceptance suite."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .counters import fenwick_count, merge_count
from .engine import count_inversions
from .oracle import brute_count
from .rng import Xorshift64Star

__all__ = ["Mismatch", "check_sequence", "exhaustive_sweep", "random_keys", "shrink"]


@dataclass
class Mismatch:
    keys: list[int]
    expected: int
    got: int
    inner_name: str


def check_sequence(keys, *, oracle_limit: int = 100_000) -> Mismatch | None:
    """Run both inner counters over keys and compare with the oracle."""
    expected = brute_count(keys, limit=oracle_limit)
    for name, inner in (("merge", merge_count), ("fenwick", fenwick_count)):
        got, _ = count_inversions(keys, inner=inner)
        if got != expected:
            return Mismatch(list(keys), expected, got, name)
    return None


def exhaustive_sweep(n: int) -> Mismatch | None:
    """All permutations of 1..n through both counters versus the oracle."""
    for perm in permutations(range(1, n + 1)):
        bad = check_sequence(list(perm))
        if bad is not None:
            return bad
    return None


def random_keys(rng: Xorshift64Star, length: int, alphabet: int) -> list[int]:
    # alphabet 0 means the full signed 64-bit range
    if alphabet == 0:
        return [rng.next_i64() for _ in range(length)]
    return [rng.below(alphabet) for _ in range(length)]


def shrink(mismatch: Mismatch, *, oracle_limit: int = 100_000) -> Mismatch:
    """Greedily drop elements while the disagreement persists."""
    current = mismatch
    improved = True
    while improved:
        improved = False
        keys = current.keys
        for i in range(len(keys)):
            candidate = keys[:i] + keys[i + 1 :]
            bad = check_sequence(candidate, oracle_limit=oracle_limit)
            if bad is not None:
                current = bad
                improved = True
                break
    return current
