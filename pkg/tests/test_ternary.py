from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metricdim.errors import EqualStringsError, LengthMismatchError, TooLargeError
from metricdim.ternary import (
    canonical_conflict_free,
    conflict,
    is_conflict_free,
    max_conflict_free_bruteforce,
)

ternary_strings = st.text(alphabet="012", min_size=1, max_size=6)


def test_conflict_shared_two():
    report = conflict("22", "20")
    assert report.conflicts
    assert report.shared_two_index == 0
    assert report.violating_index is None


def test_conflict_violating_position():
    report = conflict("21", "12")
    assert not report.conflicts
    assert report.shared_two_index is None
    assert report.violating_index == 0


def test_conflict_no_shared_two():
    report = conflict("02", "20")
    assert not report.conflicts
    assert report.shared_two_index is None
    assert report.violating_index is None


def test_conflict_errors():
    with pytest.raises(LengthMismatchError):
        conflict("0", "00")
    with pytest.raises(EqualStringsError):
        conflict("01", "01")
    with pytest.raises(ValueError):
        conflict("03", "00")


@given(ternary_strings, ternary_strings)
@settings(max_examples=300)
def test_conflict_is_symmetric(x, y):
    if len(x) != len(y) or x == y:
        return
    assert conflict(x, y).conflicts == conflict(y, x).conflicts


def test_is_conflict_free():
    assert is_conflict_free(["21", "12"])
    assert not is_conflict_free(["22", "20"])
    assert is_conflict_free([])
    with pytest.raises(EqualStringsError):
        is_conflict_free(["0", "0"])


def test_canonical_small_sets():
    assert canonical_conflict_free(1) == ["0", "1", "2"]
    assert canonical_conflict_free(2) == [
        "00", "01", "02", "10", "11", "12", "20", "21",
    ]


@pytest.mark.parametrize("n", range(1, 9))
def test_canonical_size_formula(n):
    strings = canonical_conflict_free(n)
    assert len(strings) == 2**n + n * 2 ** (n - 1)
    assert strings == sorted(strings)
    assert all(s.count("2") <= 1 for s in strings)


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_is_conflict_free(n):
    assert is_conflict_free(canonical_conflict_free(n))


def _independent_mis(vertices, edges):
    """Plain recursive maximum independent set, for cross-checking."""
    vertices = sorted(vertices)
    adjacency = {v: set() for v in vertices}
    for x, y in edges:
        adjacency[x].add(y)
        adjacency[y].add(x)

    def recurse(pool):
        if not pool:
            return 0
        v = pool[0]
        rest = pool[1:]
        without = recurse(rest)
        with_v = 1 + recurse([u for u in rest if u not in adjacency[v]])
        return max(without, with_v)

    return recurse(vertices)


@pytest.mark.parametrize("n,expected", [(1, 3), (2, 8), (3, 20)])
def test_max_conflict_free_small(n, expected):
    size, witness = max_conflict_free_bruteforce(n)
    assert size == expected
    assert len(witness) == size
    assert is_conflict_free(witness)
    # cross-check against an unrelated maximum-independent-set search over
    # the full conflict graph
    strings = ["".join(p) for p in product("012", repeat=n)]
    edges = [
        (x, y) for x, y in combinations(strings, 2) if conflict(x, y).conflicts
    ]
    assert _independent_mis(strings, edges) == expected


def test_max_conflict_free_n2_against_full_subset_enumeration():
    strings = ["".join(p) for p in product("012", repeat=2)]
    best = 0
    for mask in range(1 << len(strings)):
        subset = [s for i, s in enumerate(strings) if mask >> i & 1]
        if all(
            not conflict(x, y).conflicts for x, y in combinations(subset, 2)
        ):
            best = max(best, len(subset))
    assert best == max_conflict_free_bruteforce(2)[0] == 8


def test_max_conflict_free_too_large():
    with pytest.raises(TooLargeError):
        max_conflict_free_bruteforce(5)
    with pytest.raises(ValueError):
        max_conflict_free_bruteforce(0)
