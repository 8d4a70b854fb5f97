"""Adaptive inversion counting over an ordered list of blocks.

The input is fed in reverse order into a sequence of blocks whose key ranges
are non-decreasing left to right.  Each arriving key scans block headers
(one comparison per header) and is front-inserted into the first block whose
max is not smaller than the key; every block passed on the way contributes
its size to the inversion count.  A key larger than every max joins the last
block, which then tracks the new max without contributing its size: those
pairs surface later through splits or the final within-block count.

A global parameter q doubles in phases.  Blocks hold between q and 2q keys
(the last may be smaller); a block reaching 2q+1 keys is split around its
stable median, with the displacement sum of the induced permutation added to
the count.  A phase ends as soon as the header comparisons recorded for it
exceed n / sqrt(q) + t, where t is the number of insertions completed in the
phase; the check runs before every header comparison in exact integer
arithmetic.  On a phase change the current insertion aborts (its pending
count is discarded, its comparisons stay with the old phase), q doubles,
adjacent blocks are combined pairwise, and the insertion restarts.

Finalizing runs an inner counter over every block in stored order and adds
the results.  With the merge-based inner counter the whole run costs
O(n + n lg(Inv/n)) comparisons for n keys and Inv inversions.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .counters import InnerCounter, fenwick_count, merge_count
from .instrumentation import PhaseRecord, RunStats
from .selection import stable_partition_by_rank

__all__ = ["Block", "InversionEngine", "count_inversions", "displacement_sum"]


def displacement_sum(pi: Sequence[int]) -> int:
    """Sum of pi(p) - p over positions moved right by permutation pi.

    pi is given as a sequence where pi[p-1] is the 1-based new position of
    old position p.  Raises ValueError if pi is not a permutation of 1..m.
    For a stable median split this equals the number of strict inversions
    between the two sides.
    """
    m = len(pi)
    seen = bytearray(m + 1)
    total = 0
    for p, target in enumerate(pi, 1):
        if not 1 <= target <= m or seen[target]:
            raise ValueError("pi is not a permutation of 1..m")
        seen[target] = 1
        if target > p:
            total += target - p
    return total


class _Segment:
    __slots__ = ("data", "rev", "next")

    def __init__(self, data: list, rev: bool = False, nxt: "_Segment | None" = None):
        self.data = data
        self.rev = rev
        self.next = nxt


class Block:
    """One block: linked segments of keys with O(1) front insert and concat.

    Stored order is newest-first for front inserts; a reversed segment keeps
    its keys appended at the Python-list tail and is read backwards.  Blocks
    are never empty.
    """

    __slots__ = ("head", "tail", "size", "max_key", "next")

    def __init__(self, head: _Segment, size: int, max_key: int):
        self.head = head
        self.tail = head
        self.size = size
        self.max_key = max_key
        self.next: Block | None = None

    @classmethod
    def from_keys(cls, keys: Iterable[int]) -> "Block":
        data = list(keys)
        if not data:
            raise ValueError("a block cannot be empty")
        return cls(_Segment(data), len(data), max(data))

    def push_front(self, key: int) -> None:
        # max_key is maintained by the caller; a key below the max never moves it
        head = self.head
        if head.rev:
            head.data.append(key)
        else:
            self.head = _Segment([key], rev=True, nxt=head)
        self.size += 1

    def absorb(self, other: "Block") -> None:
        """Concatenate other's keys after this block's keys, in O(1)."""
        self.tail.next = other.head
        self.tail = other.tail
        self.size += other.size
        if other.max_key > self.max_key:
            self.max_key = other.max_key

    def reset_keys(self, keys: list) -> None:
        self.head = self.tail = _Segment(keys)
        self.size = len(keys)
        self.max_key = max(keys)

    def to_list(self) -> list:
        out: list = []
        seg = self.head
        while seg is not None:
            if seg.rev:
                out.extend(reversed(seg.data))
            else:
                out.extend(seg.data)
            seg = seg.next
        return out


class InversionEngine:
    """Reference implementation of the adaptive counter.

    State is deliberately open: q, phase_index, phase_inserted,
    phase_comparisons, inv_acc and the block chain are readable (and, for
    tests, writable) attributes.  Keys are 64-bit signed by contract, but the
    reference path accepts any Python ints; inv_acc is a plain int and never
    overflows.
    """

    def __init__(self, n_total: int):
        if n_total < 0:
            raise ValueError("n_total must be nonnegative")
        self.n_total = n_total
        self.q = 1
        self.phase_index = 1
        self.phase_inserted = 0
        self.phase_comparisons = 0
        self.inv_acc = 0
        self._head: Block | None = None
        self._inserted = 0
        self._closed_phases: list[PhaseRecord] = []
        self._split_count = 0
        self._split_work = 0

    @classmethod
    def from_blocks(
        cls,
        blocks_keys: Sequence[Sequence[int]],
        q: int = 1,
        n_total: int | None = None,
    ) -> "InversionEngine":
        """Build an engine in a posed mid-run state (for tests and demos)."""
        assert q >= 1 and q & (q - 1) == 0, "q must be a power of two"
        total = sum(len(ks) for ks in blocks_keys)
        eng = cls(total if n_total is None else n_total)
        eng.q = q
        eng.phase_index = q.bit_length()
        eng._inserted = total
        prev: Block | None = None
        for ks in blocks_keys:
            blk = Block.from_keys(ks)
            if prev is None:
                eng._head = blk
            else:
                prev.next = blk
            prev = blk
        return eng

    @property
    def blocks(self) -> list[Block]:
        out = []
        blk = self._head
        while blk is not None:
            out.append(blk)
            blk = blk.next
        return out

    def threshold_exceeded(self) -> bool:
        """Exact integer form of comparisons > n / sqrt(q) + t."""
        d = self.phase_comparisons - self.phase_inserted
        return d > 0 and d * d * self.q > self.n_total * self.n_total

    def insert(self, key: int) -> None:
        """Feed the next key (the input is fed back to front)."""
        assert self._inserted < self.n_total, "more keys than n_total"
        while not self._try_insert(key):
            self.start_new_phase()
        self._inserted += 1
        self.phase_inserted += 1

    def _try_insert(self, key) -> bool:
        # returns False when the phase threshold tripped mid-scan
        blk = self._head
        if blk is None:
            # creation probe: charged as the one header comparison
            self.phase_comparisons += 1
            self._head = Block.from_keys([key])
            return True
        nn = self.n_total * self.n_total
        q = self.q
        t = self.phase_inserted
        delta = 0
        while True:
            c = self.phase_comparisons
            d = c - t
            if d > 0 and d * d * q > nn:
                return False  # pending delta is discarded
            self.phase_comparisons = c + 1
            if key <= blk.max_key:
                blk.push_front(key)
                break
            nxt = blk.next
            if nxt is None:
                blk.push_front(key)  # joins the last block from above
                blk.max_key = key
                break
            delta += blk.size
            blk = nxt
        self.inv_acc += delta
        if blk.size == 2 * q + 1:
            self._split(blk)
        return True

    def _split(self, block: Block) -> None:
        q = self.q
        assert block.size == 2 * q + 1, "split requires size exactly 2q+1"
        buf = [(key, pos) for pos, key in enumerate(block.to_list(), 1)]
        first, second, pi = stable_partition_by_rank(buf, q + 1)
        self.inv_acc += displacement_sum(pi)
        right = Block.from_keys([key for key, _ in second])
        block.reset_keys([key for key, _ in first])
        right.next = block.next
        block.next = right
        self._split_count += 1
        self._split_work += 2 * q + 1

    def split_block(self, index: int) -> None:
        """Split the index-th block (0-based).  Its size must be 2q+1."""
        blk = self._head
        for _ in range(index):
            assert blk is not None, "block index out of range"
            blk = blk.next
        assert blk is not None, "block index out of range"
        self._split(blk)

    def start_new_phase(self) -> None:
        """Close the current phase: double q and combine blocks pairwise."""
        self._closed_phases.append(
            PhaseRecord(
                self.phase_index, self.q, self.phase_inserted, self.phase_comparisons
            )
        )
        self.phase_index += 1
        self.q *= 2
        self.phase_inserted = 0
        self.phase_comparisons = 0
        blk = self._head
        while blk is not None:
            nxt = blk.next
            if nxt is None:
                break  # odd trailing block stays as is
            blk.absorb(nxt)
            blk.next = nxt.next
            blk = blk.next

    def finalize(self, inner: InnerCounter = merge_count) -> int:
        """Total inversions: inv_acc plus the inner count of every block."""
        assert self._inserted == self.n_total, "finalize before all keys fed"
        total = self.inv_acc
        blk = self._head
        while blk is not None:
            total += inner(blk.to_list())
            blk = blk.next
        return total

    def stats(self) -> RunStats:
        phases = (
            *self._closed_phases,
            PhaseRecord(
                self.phase_index, self.q, self.phase_inserted, self.phase_comparisons
            ),
        )
        return RunStats(
            phases=phases,
            final_q=self.q,
            split_count=self._split_count,
            split_work=self._split_work,
            inner_total_elements=self._inserted,
        )


_KERNEL_MIN = 512  # below this the reference path wins on call overhead
_KERNEL_MAX = 1 << 30  # int64 headroom for the squared threshold arithmetic


def _inner_name(inner: InnerCounter) -> str | None:
    if inner is merge_count:
        return "merge"
    if inner is fenwick_count:
        return "fenwick"
    return None


def count_inversions(
    seq: Sequence[int],
    inner: InnerCounter = merge_count,
    *,
    engine: str = "auto",
) -> tuple[int, RunStats]:
    """Count inversions of seq adaptively; returns (count, RunStats).

    engine selects the implementation: "reference" is the pure-Python engine
    above, "fast" the compiled kernel (requires numba and one of the built-in
    inner counters), "auto" picks the kernel for large inputs when available.
    Both produce identical counts and statistics.
    """
    if engine not in ("auto", "reference", "fast"):
        raise ValueError(f"unknown engine {engine!r}")
    n = len(seq)
    if engine != "reference":
        from . import _kernels

        name = _inner_name(inner)
        eligible = name is not None and _kernels.HAVE_NUMBA and n <= _KERNEL_MAX
        if engine == "fast":
            if not eligible:
                raise RuntimeError(
                    "fast engine needs numba and a built-in inner counter"
                )
            try:
                return _kernels.kernel_count(seq, name)
            except OverflowError as exc:
                raise RuntimeError(
                    "fast engine needs keys in the signed 64-bit range"
                ) from exc
        if eligible and n >= _KERNEL_MIN:
            try:
                return _kernels.kernel_count(seq, name)
            except OverflowError:
                pass  # keys outside int64: fall back to arbitrary precision
    eng = InversionEngine(n)
    for i in range(n - 1, -1, -1):
        eng.insert(seq[i])
    return eng.finalize(inner), eng.stats()
