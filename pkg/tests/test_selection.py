"""Deterministic selection and the stable split around a rank."""

import random

import pytest
from hypothesis import given, strategies as st

from invcount.selection import select_rank, stable_partition_by_rank


def items(keys):
    return [(k, p) for p, k in enumerate(keys, 1)]


def test_select_rank_examples():
    assert select_rank(items([5, 2, 6, 1, 4]), 3) == (4, 5)
    assert select_rank(items([7, 7, 7]), 2) == (7, 2)  # ties break by position
    assert select_rank(items([9]), 1) == (9, 1)


def test_select_rank_out_of_range():
    with pytest.raises(ValueError):
        select_rank(items([1, 2]), 0)
    with pytest.raises(ValueError):
        select_rank(items([1, 2]), 3)


def test_select_rank_matches_sorting_oracle():
    rng = random.Random(7)
    for trial in range(200):
        n = rng.randrange(1, 120)
        keys = [rng.randrange(10) for _ in range(n)]  # heavy duplicates
        buf = items(keys)
        ranked = sorted(buf)
        r = rng.randrange(1, n + 1)
        assert select_rank(list(buf), r) == ranked[r - 1]


def test_select_rank_large_buffer():
    rng = random.Random(11)
    keys = [rng.randrange(1000) for _ in range(100_000)]
    buf = items(keys)
    assert select_rank(list(buf), 50_000) == sorted(buf)[49_999]


def test_partition_example():
    first, second, pi = stable_partition_by_rank(items([5, 2, 6, 1, 4]), 3)
    assert [k for k, _ in first] == [2, 1, 4]
    assert [k for k, _ in second] == [5, 6]
    assert pi == [4, 1, 5, 2, 3]


def test_partition_sorted_is_identity():
    first, second, pi = stable_partition_by_rank(items([1, 2, 3]), 2)
    assert [k for k, _ in first] == [1, 2]
    assert [k for k, _ in second] == [3]
    assert pi == [1, 2, 3]


def test_partition_ties_stay_stable():
    first, second, pi = stable_partition_by_rank(items([9, 9]), 1)
    assert first == [(9, 1)]
    assert second == [(9, 2)]
    assert pi == [1, 2]


def test_partition_rank_out_of_range():
    with pytest.raises(ValueError):
        stable_partition_by_rank(items([1]), 2)


@given(
    keys=st.lists(st.integers(0, 8), min_size=1, max_size=40),
    data=st.data(),
)
def test_partition_properties(keys, data):
    r = data.draw(st.integers(1, len(keys)))
    buf = items(keys)
    first, second, pi = stable_partition_by_rank(buf, r)
    assert len(first) == r
    assert len(second) == len(keys) - r
    # both parts keep old relative order
    assert first == sorted(first, key=lambda it: it[1])
    assert second == sorted(second, key=lambda it: it[1])
    # parts agree with a sort-based oracle on membership
    ranked = sorted(buf)
    assert sorted(first) == ranked[:r]
    assert sorted(second) == ranked[r:]
    # pi is a bijection mapping old position to position in first + second
    assert sorted(pi) == list(range(1, len(keys) + 1))
    concat = first + second
    for old_pos, new_pos in enumerate(pi, 1):
        assert concat[new_pos - 1][1] == old_pos


def test_partition_leaves_input_unchanged():
    buf = items([4, 4, 1, 3])
    snapshot = list(buf)
    stable_partition_by_rank(buf, 2)
    assert buf == snapshot
