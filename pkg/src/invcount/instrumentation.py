"""Run statistics and the analytical bounds checked as data, not asserts.

Every bound is evaluated in exact integer arithmetic.  Real-valued bounds of
the form x <= n / sqrt(q) + y are checked by squaring: with d = x - y, the
bound holds iff d <= 0 or d*d*q <= n*n.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "PhaseRecord",
    "RunStats",
    "Violation",
    "assert_phase_bounds",
    "assert_qhat_bound",
    "stats_lines",
]


@dataclass(frozen=True)
class PhaseRecord:
    """One phase of a run: q stayed fixed while these totals accrued.

    index is 1-based; q == 2 ** (index - 1); inserted is the number of
    elements whose insertion completed during the phase; comparisons is the
    number of header comparisons charged to the phase (an insertion aborted
    by a phase change leaves its comparisons here).
    """

    index: int
    q: int
    inserted: int
    comparisons: int


@dataclass(frozen=True)
class RunStats:
    phases: tuple[PhaseRecord, ...]
    final_q: int
    split_count: int
    split_work: int
    inner_total_elements: int

    @property
    def phase_count(self) -> int:
        return len(self.phases)

    @property
    def total_header_comparisons(self) -> int:
        return sum(p.comparisons for p in self.phases)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    phase: int | None = None


def _phase_limit(n: int) -> int:
    # ceil(lg n) + 1 phases at most; degenerate inputs get the single phase
    if n <= 1:
        return 1
    return (n - 1).bit_length() + 1


def assert_phase_bounds(stats: RunStats, n: int) -> list[Violation]:
    """Check the per-phase and whole-run comparison/split bounds.

    Returns violations as data; an empty list means every bound held.
    Checked:
      * per phase: comparisons <= n / sqrt(q) + inserted + 1
      * phase count <= ceil(lg n) + 1
      * total header comparisons <= 6 n
      * split_work <= 8 n
    """
    out: list[Violation] = []
    nn = n * n
    for p in stats.phases:
        d = p.comparisons - p.inserted - 1
        if d > 0 and d * d * p.q > nn:
            out.append(
                Violation(
                    "phase_comparisons",
                    f"phase {p.index}: comparisons={p.comparisons} exceeds "
                    f"n/sqrt(q)+t+1 with n={n} q={p.q} t={p.inserted}",
                    p.index,
                )
            )
    limit = _phase_limit(n)
    if stats.phase_count > limit:
        out.append(
            Violation(
                "phase_count",
                f"{stats.phase_count} phases exceed ceil(lg n)+1 = {limit} for n={n}",
            )
        )
    total = stats.total_header_comparisons
    if total > 6 * n:
        out.append(
            Violation(
                "total_comparisons",
                f"total header comparisons {total} exceed 6n = {6 * n}",
            )
        )
    if stats.split_work > 8 * n:
        out.append(
            Violation(
                "split_work",
                f"split work {stats.split_work} exceeds 8n = {8 * n}",
            )
        )
    return out


def assert_qhat_bound(stats: RunStats, n: int, inv: int) -> Violation | None:
    """Check final_q <= max(2, 4 * (inv/n)^2) without floating point."""
    if stats.final_q <= 2:
        return None
    if stats.final_q * n * n <= 4 * inv * inv:
        return None
    return Violation(
        "final_q",
        f"final q {stats.final_q} exceeds max(2, 4*(inv/n)^2) with inv={inv} n={n}",
    )


def stats_lines(stats: RunStats) -> list[str]:
    """key=value diagnostic lines, one per line, stable key set."""
    lines = [
        f"final_q={stats.final_q}",
        f"phases={stats.phase_count}",
        f"header_comparisons={stats.total_header_comparisons}",
        f"split_count={stats.split_count}",
        f"split_work={stats.split_work}",
        f"inner_elements={stats.inner_total_elements}",
    ]
    for p in stats.phases:
        lines.append(f"phase.{p.index}.q={p.q}")
        lines.append(f"phase.{p.index}.inserted={p.inserted}")
        lines.append(f"phase.{p.index}.comparisons={p.comparisons}")
    return lines
