"""Conflict-free ternary-string combinatorics.

Two distinct equal-length strings over {0,1,2} conflict when they share a
position where both hold 2 and every position where they differ holds
{0,2}. A set is conflict-free when no two of its members conflict.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .errors import EqualStringsError, LengthMismatchError, TooLargeError

_DIGITS = frozenset("012")


def validate_ternary(s: str) -> str:
    if not isinstance(s, str) or not s or not _DIGITS.issuperset(s):
        raise ValueError(f"not a ternary string: {s!r}")
    return s


@dataclass(frozen=True)
class ConflictReport:
    """Outcome of a pairwise conflict test.

    `shared_two_index` is the least position where both strings hold 2 (if
    any); `violating_index` is the least differing position whose digit pair
    is not {0,2} (if any). The pair conflicts iff the former exists and the
    latter does not. Indices are 0-based.
    """

    conflicts: bool
    shared_two_index: int | None
    violating_index: int | None


def conflict(x: str, y: str) -> ConflictReport:
    """Full conflict report for two distinct equal-length ternary strings."""
    validate_ternary(x)
    validate_ternary(y)
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    if x == y:
        raise EqualStringsError(f"strings must be distinct, both are {x!r}")
    shared = None
    violating = None
    for idx, (cx, cy) in enumerate(zip(x, y)):
        if cx == cy:
            if cx == "2" and shared is None:
                shared = idx
        elif violating is None and ("1" in (cx, cy)):
            violating = idx
    return ConflictReport(shared is not None and violating is None, shared, violating)


def _conflicts(x: str, y: str) -> bool:
    # fast path without report bookkeeping
    shared = False
    for cx, cy in zip(x, y):
        if cx != cy:
            if cx == "1" or cy == "1":
                return False
        elif cx == "2":
            shared = True
    return shared


def is_conflict_free(strings: Sequence[str]) -> bool:
    """Whether no two strings in the collection conflict."""
    strings = list(strings)
    for s in strings:
        validate_ternary(s)
    if len({len(s) for s in strings}) > 1:
        raise LengthMismatchError("strings must share one length")
    if len(set(strings)) != len(strings):
        raise EqualStringsError("strings must be pairwise distinct")
    return not any(_conflicts(x, y) for x, y in combinations(strings, 2))


def canonical_conflict_free(n: int) -> list[str]:
    """All length-n ternary strings with at most one digit 2, sorted.

    These are pairwise conflict-free, and there are 2^n + n * 2^(n-1) of
    them.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    out = ["".join(digits) for digits in product("012", repeat=n)
           if digits.count("2") <= 1]
    out.sort()
    return out


def _max_independent(strings: list[str], adjacent) -> tuple[int, list[str]]:
    """Deterministic branch-and-bound maximum independent set."""
    best_size = 0
    best_pick: list[str] = []

    def grow(pool: list[str], picked: list[str]) -> None:
        nonlocal best_size, best_pick
        if len(picked) + len(pool) <= best_size:
            return
        if not pool:
            if len(picked) > best_size:
                best_size = len(picked)
                best_pick = list(picked)
            return
        head, rest = pool[0], pool[1:]
        grow([s for s in rest if not adjacent(head, s)], picked + [head])
        grow(rest, picked)

    grow(sorted(strings), [])
    return best_size, sorted(best_pick)


def max_conflict_free_bruteforce(n: int) -> tuple[int, list[str]]:
    """Exact maximum conflict-free subset of the length-n ternary strings.

    Only n <= 4 is accepted. Strings are partitioned by the set of positions
    holding digit 1 (strings in different parts never conflict, since some
    differing position pairs a 1), and a maximum independent set in the
    conflict graph is found inside each part. This decomposition is a search
    optimization only; the per-part search stays exhaustive.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 4:
        raise TooLargeError(f"brute force capped at n=4, got {n}")
    parts: dict[frozenset[int], list[str]] = {}
    for digits in product("012", repeat=n):
        s = "".join(digits)
        ones = frozenset(i for i, c in enumerate(s) if c == "1")
        parts.setdefault(ones, []).append(s)
    total = 0
    witness: list[str] = []
    for members in parts.values():
        size, picked = _max_independent(members, _conflicts)
        total += size
        witness.extend(picked)
    return total, sorted(witness)
