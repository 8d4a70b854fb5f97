"""Adaptive inversion counting.

The engine keeps the keys seen so far in a sequence of ordered blocks and
charges one comparison per block header it inspects, so nearly sorted inputs
cost O(n) total and the general bound is O(n + n lg(Inv/n)) comparisons,
where Inv is the number of inversions.  See README.md for the block layout,
phase schedule, and the per-phase comparison budget.
"""

from .counters import INNER_COUNTERS, fenwick_count, merge_count
from .engine import Block, InversionEngine, count_inversions, displacement_sum
from .generators import GENERATOR_METHODS, GenSpec, generate, max_inversions
from .instrumentation import (
    PhaseRecord,
    RunStats,
    Violation,
    assert_phase_bounds,
    assert_qhat_bound,
    stats_lines,
)
from .oracle import brute_count
from .rng import Xorshift64Star
from .selection import select_rank, stable_partition_by_rank

__version__ = "0.1.0"

__all__ = [
    "Block",
    "GENERATOR_METHODS",
    "GenSpec",
    "INNER_COUNTERS",
    "InversionEngine",
    "PhaseRecord",
    "RunStats",
    "Violation",
    "Xorshift64Star",
    "__version__",
    "assert_phase_bounds",
    "assert_qhat_bound",
    "brute_count",
    "count_inversions",
    "displacement_sum",
    "fenwick_count",
    "generate",
    "max_inversions",
    "merge_count",
    "select_rank",
    "stable_partition_by_rank",
    "stats_lines",
]
