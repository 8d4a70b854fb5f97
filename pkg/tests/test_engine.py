"""The adaptive engine: posed-state operation examples, invariants, and fuzz.

Posed states are built with InversionEngine.from_blocks, which skips the
feeding phase; that keeps each example focused on exactly one rule.
"""

import pytest
from hypothesis import given, settings, strategies as st

from invcount.counters import fenwick_count, merge_count
from invcount.engine import InversionEngine, count_inversions, displacement_sum
from invcount.oracle import brute_count


# --- displacement_sum ----------------------------------------------------


def test_displacement_identity():
    assert displacement_sum([1, 2, 3, 4, 5]) == 0


def test_displacement_split_example():
    # old position p -> new position pi[p-1]
    assert displacement_sum([4, 1, 5, 2, 3]) == 5


def test_displacement_single_swap():
    assert displacement_sum([2, 1]) == 1


def test_displacement_rejects_non_bijections():
    with pytest.raises(ValueError):
        displacement_sum([1, 1])
    with pytest.raises(ValueError):
        displacement_sum([0, 1])
    with pytest.raises(ValueError):
        displacement_sum([2, 3])


# --- threshold ------------------------------------------------------------


def posed_threshold(n, q, t, c):
    eng = InversionEngine(n)
    eng.q = q
    eng.phase_inserted = t
    eng.phase_comparisons = c
    return eng.threshold_exceeded()


def test_threshold_boundary_is_not_exceeding():
    assert posed_threshold(100, 1, 10, 110) is False
    assert posed_threshold(100, 1, 10, 111) is True
    assert posed_threshold(100, 4, 0, 50) is False


# --- insert ---------------------------------------------------------------


def test_insert_passes_headers_and_lands():
    # q=2 so the landing block stays below the 2q+1 split size
    eng = InversionEngine.from_blocks([[1, 3, 5], [8, 9]], q=2, n_total=6)
    c0 = eng.phase_comparisons
    eng.insert(7)
    assert eng.phase_comparisons - c0 == 2
    assert eng.inv_acc == 3  # passed B1 of size 3
    b1, b2 = eng.blocks
    assert b1.to_list() == [1, 3, 5]
    assert b2.to_list() == [7, 8, 9]  # front insert
    assert b2.max_key == 9


def test_insert_above_all_maxima_joins_last_block():
    eng = InversionEngine.from_blocks([[2]], n_total=2)
    eng.insert(9)
    (b1,) = eng.blocks
    assert eng.phase_comparisons == 1
    assert eng.inv_acc == 0  # the landing block's size is never added
    assert b1.to_list() == [9, 2]
    assert b1.max_key == 9


def test_insert_into_empty_charges_the_creation_probe():
    # one comparison for the structure probe keeps sorted input at exactly
    # n total comparisons
    eng = InversionEngine(3)
    eng.insert(4)
    assert eng.phase_comparisons == 1
    assert eng.inv_acc == 0
    assert eng.blocks[0].to_list() == [4]


# --- split ----------------------------------------------------------------


def test_split_around_stable_median():
    eng = InversionEngine.from_blocks([[5, 2, 6, 1, 4]], q=2)
    eng.split_block(0)
    b1, b2 = eng.blocks
    assert b1.to_list() == [2, 1, 4]
    assert b2.to_list() == [5, 6]
    assert (b1.size, b1.max_key) == (3, 4)
    assert (b2.size, b2.max_key) == (2, 6)
    assert eng.inv_acc == 5
    assert eng.stats().split_work == 5


def test_split_sorted_block_costs_nothing():
    eng = InversionEngine.from_blocks([[1, 2, 3]], q=1)
    eng.split_block(0)
    assert [b.to_list() for b in eng.blocks] == [[1, 2], [3]]
    assert eng.inv_acc == 0


def test_split_constant_block_costs_nothing():
    eng = InversionEngine.from_blocks([[7, 7, 7]], q=1)
    eng.split_block(0)
    assert [b.to_list() for b in eng.blocks] == [[7, 7], [7]]
    assert eng.inv_acc == 0


# --- phase change ---------------------------------------------------------


@pytest.mark.parametrize(
    "sizes_in,sizes_out",
    [([2, 2, 2, 1], [4, 3]), ([2, 2, 2], [4, 2]), ([2], [2])],
)
def test_combine_pairwise(sizes_in, sizes_out):
    key = 0
    blocks = []
    for s in sizes_in:  # ascending keys keep the inter-block order valid
        blocks.append(list(range(key, key + s)))
        key += s
    eng = InversionEngine.from_blocks(blocks, q=1)
    eng.start_new_phase()
    assert [b.size for b in eng.blocks] == sizes_out
    assert eng.q == 2
    assert eng.phase_index == 2
    assert eng.phase_comparisons == 0 and eng.phase_inserted == 0
    # absorbed keys keep their stored order
    flat = [k for b in eng.blocks for k in b.to_list()]
    assert flat == list(range(key))


# --- finalize -------------------------------------------------------------


@pytest.mark.parametrize("inner", [merge_count, fenwick_count])
def test_finalize_examples(inner):
    assert InversionEngine.from_blocks([[2, 1]]).finalize(inner) == 1
    assert InversionEngine.from_blocks([[1], [2], [3]]).finalize(inner) == 0
    eng = InversionEngine.from_blocks([[2, 1, 4], [5, 6]], q=2)
    eng.inv_acc = 5
    assert eng.finalize(inner) == 6


# --- whole runs -----------------------------------------------------------


def test_count_pinned_sequences():
    assert count_inversions([3, 1, 4, 1, 5, 9, 2, 6])[0] == 8
    assert count_inversions([3, 2, 1])[0] == 3
    assert count_inversions([5, 1, 5])[0] == 1
    assert count_inversions([])[0] == 0
    assert count_inversions([42])[0] == 0
    assert count_inversions([4, 3, 2, 1, 0])[0] == 10


def test_sorted_run_costs_one_comparison_per_key():
    n = 1000
    count, stats = count_inversions(list(range(n)), engine="reference")
    assert count == 0
    assert stats.final_q == 1
    assert stats.total_header_comparisons == n
    assert stats.phase_count == 1


def test_constant_run_counts_nothing():
    count, stats = count_inversions([9] * 700, engine="reference")
    assert count == 0
    assert stats.final_q == 1


def test_stats_are_deterministic():
    keys = [i * 2654435761 % 97 for i in range(300)]
    a = count_inversions(keys, engine="reference")
    b = count_inversions(keys, engine="reference")
    assert a == b


def test_inner_choice_never_changes_the_count():
    keys = [i * 48271 % 31 for i in range(257)]
    with_merge, _ = count_inversions(keys, merge_count, engine="reference")
    with_fenwick, _ = count_inversions(keys, fenwick_count, engine="reference")
    assert with_merge == with_fenwick == brute_count(keys)


def test_engine_argument_is_validated():
    with pytest.raises(ValueError):
        count_inversions([1, 2], engine="vectorized")


def test_feeding_more_than_declared_is_a_fault():
    eng = InversionEngine(1)
    eng.insert(5)
    with pytest.raises(AssertionError):
        eng.insert(6)


def check_structure(eng):
    blocks = eng.blocks
    q = eng.q
    for i, blk in enumerate(blocks):
        keys = blk.to_list()
        assert keys, "blocks are never empty"
        assert blk.size == len(keys)
        assert blk.max_key == max(keys)
        if i + 1 < len(blocks):
            assert blk.size <= 2 * q, "non-last block above the size window"
            assert blk.max_key <= min(blocks[i + 1].to_list())


def test_structure_invariants_hold_after_every_insert():
    keys = [i * 1103515245 % 53 for i in range(160)]
    eng = InversionEngine(len(keys))
    for key in reversed(keys):
        eng.insert(key)
        check_structure(eng)
    assert eng.finalize() == brute_count(keys)


@settings(deadline=None, max_examples=150)
@given(st.lists(st.integers(0, 30), max_size=120))
def test_fuzz_against_oracle(keys):
    count, stats = count_inversions(keys, engine="reference")
    assert count == brute_count(keys)
    assert stats.inner_total_elements == len(keys)


@settings(deadline=None, max_examples=60)
@given(st.lists(st.integers(min_value=-(2**70), max_value=2**70), max_size=80))
def test_reference_path_handles_arbitrary_ints(keys):
    # the reference engine has no word-size contract to honor
    assert count_inversions(keys, engine="reference")[0] == brute_count(keys)
