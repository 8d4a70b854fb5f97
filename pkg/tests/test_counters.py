"""Inner counters: exact strict-inversion counts, duplicates never counted."""

import pytest
from hypothesis import given, strategies as st

from invcount.counters import INNER_COUNTERS, fenwick_count, merge_count
from invcount.oracle import brute_count

COUNTERS = [merge_count, fenwick_count]


@pytest.mark.parametrize("counter", COUNTERS)
def test_pinned_values(counter):
    assert counter([5, 1, 5]) == 1
    assert counter([3, 1, 4, 1, 5, 9, 2, 6]) == 8
    assert counter([3, 2, 1]) == 3
    assert counter([2, 1]) == 1


@pytest.mark.parametrize("counter", COUNTERS)
def test_degenerate_inputs(counter):
    assert counter([]) == 0
    assert counter([42]) == 0
    assert counter([1, 2, 3, 4]) == 0


@pytest.mark.parametrize("counter", COUNTERS)
def test_equal_keys_never_count(counter):
    assert counter([7] * 100) == 0
    assert counter([1, 1, 2, 2, 1, 1]) == brute_count([1, 1, 2, 2, 1, 1]) == 4


@pytest.mark.parametrize("counter", COUNTERS)
def test_reverse_is_maximal(counter):
    n = 200
    assert counter(list(range(n, 0, -1))) == n * (n - 1) // 2


@given(st.lists(st.integers(-5, 5), max_size=200))
def test_counters_agree_with_oracle(keys):
    expected = brute_count(keys)
    assert merge_count(keys) == expected
    assert fenwick_count(keys) == expected


@given(st.lists(st.integers(min_value=-(2**63), max_value=2**63 - 1), max_size=60))
def test_counters_agree_on_full_range(keys):
    assert merge_count(keys) == fenwick_count(keys) == brute_count(keys)


def test_registry():
    assert INNER_COUNTERS == {"merge": merge_count, "fenwick": fenwick_count}
