"""The quadratic oracle itself needs a sanity net: closed forms and the guard."""

import pytest

from invcount.oracle import brute_count


def test_closed_forms():
    assert brute_count([]) == 0
    assert brute_count([5]) == 0
    assert brute_count([1, 2, 3]) == 0
    assert brute_count([3, 2, 1]) == 3
    assert brute_count(list(range(99, -1, -1))) == 100 * 99 // 2
    assert brute_count([3, 1, 4, 1, 5, 9, 2, 6]) == 8


def test_vector_and_loop_paths_agree():
    # length 63 takes the pure loop, 64 the numpy path; same structure either way
    base = [i * 7919 % 13 for i in range(64)]
    shifted = base[1:]
    diff = brute_count(base) - brute_count(shifted)
    assert diff == sum(1 for x in shifted if x < base[0])


def test_duplicates():
    assert brute_count([2, 2, 2]) == 0
    assert brute_count([2, 1, 2, 1]) == 3


def test_length_guard():
    with pytest.raises(ValueError, match="exceeds limit"):
        brute_count([0] * 11, limit=10)
    assert brute_count([0] * 11, limit=11) == 0


def test_negative_keys():
    assert brute_count([0, -1, -2]) == 3
    assert brute_count([-(2**63), 2**63 - 1]) == 0
    assert brute_count([2**63 - 1, -(2**63)]) == 1
