from itertools import product

import pytest
from hypothesis import given, strategies as st

from pathcubes import CapacityError, PathPower
from pathcubes.counting import count_containing, count_independent_closed, count_independent_k
from pathcubes.enumeration import (
    cardinality,
    enumerate_independent,
    enumerate_independent_k,
    is_independent,
    iter_independent,
    ones,
)


@pytest.mark.parametrize("bits,h,expected", [("0000", 1, True), ("1010", 1, True), ("1010", 2, False), ("", 3, True)])
def test_is_independent(bits, h, expected):
    assert is_independent(bits, h) is expected


def test_ones_and_cardinality():
    assert ones("01101") == [2, 3, 5]
    assert cardinality("01101") == 3


@pytest.mark.parametrize(
    "n,h,expected",
    [
        (0, 1, [""]),
        (3, 1, ["000", "001", "010", "100", "101"]),
        (3, 2, ["000", "001", "010", "100"]),
    ],
)
def test_enumerate_independent(n, h, expected):
    assert enumerate_independent(PathPower(n, h)) == expected


@pytest.mark.parametrize(
    "n,h,k,expected",
    [(4, 1, 2, ["0101", "1001", "1010"]), (5, 2, 0, ["00000"]), (2, 1, 2, [])],
)
def test_enumerate_independent_k(n, h, k, expected):
    assert enumerate_independent_k(PathPower(n, h), k) == expected


def test_cap():
    with pytest.raises(CapacityError):
        enumerate_independent(PathPower(31, 5))
    with pytest.raises(CapacityError):
        enumerate_independent_k(PathPower(31, 5), 2)
    with pytest.raises(CapacityError):
        enumerate_independent(PathPower(12, 1), cap=10)
    # raising the cap lets it through
    assert len(enumerate_independent(PathPower(32, 8), cap=40)) == count_independent_closed(PathPower(32, 8))


def test_iteration_is_lazy_but_guarded():
    with pytest.raises(CapacityError):
        iter_independent(PathPower(40, 0))
    assert next(iter_independent(PathPower(5, 1))) == "00000"


def filter_all_strings(n, h):
    strings = ["".join(t) for t in product("01", repeat=n)]
    return [s for s in strings if is_independent(s, h)]


@given(st.integers(0, 14), st.integers(0, 5))
def test_enumeration_matches_filtered_strings(n, h):
    p = PathPower(n, h)
    subsets = enumerate_independent(p)
    assert subsets == filter_all_strings(n, h)
    assert len(subsets) == count_independent_closed(p)
    assert all(int(a, 2) < int(b, 2) for a, b in zip(subsets, subsets[1:]))
    assert all(len(s) == n for s in subsets)


@given(st.integers(0, 14), st.integers(0, 5), st.integers(0, 15))
def test_by_size_is_filtered_sublist(n, h, k):
    p = PathPower(n, h)
    sub = enumerate_independent_k(p, k)
    assert sub == [s for s in enumerate_independent(p) if cardinality(s) == k]
    assert len(sub) == count_independent_k(p, k)


@given(st.integers(1, 12), st.integers(0, 4))
def test_positional_counts_match_containing(n, h):
    p = PathPower(n, h)
    subsets = enumerate_independent(p)
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            hits = sum(1 for s in subsets if cardinality(s) == k and s[i - 1] == "1")
            assert hits == count_containing(p, k, i)


def test_deterministic():
    p = PathPower(16, 1)
    assert enumerate_independent(p) == enumerate_independent(p)
