"""Exact counting of partitions with parts drawn from a fixed finite set.

The central quantity is the number of ways to write a nonnegative integer n
as a sum of elements of a part set A (order irrelevant, unlimited repetition).
Counts are plain Python ints, so they never overflow; the brute-force
enumerator exists purely as an independent oracle for the dynamic program.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptySet,
    NegativeBound,
    NonPositivePart,
    OracleBoundExceeded,
    PartExceedsN,
    PartNotInSet,
)

# A partition is stored as its parts in non-increasing order.
Partition = tuple[int, ...]

# enumerate_partitions refuses to materialize more partitions than this.
ORACLE_PARTITION_LIMIT = 10**6


@dataclass(frozen=True)
class PartSet:
    """A finite set of distinct positive parts, kept sorted ascending."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise EmptySet("a part set needs at least one part")
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise NonPositivePart(f"parts must be integers >= 1, got {p!r}")
        if any(a >= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be strictly increasing; use make_part_set")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def gcd_all(self) -> int:
        return math.gcd(*self.parts)

    @property
    def period(self) -> int:
        return math.prod(self.parts)

    def reduced(self) -> "PartSet":
        """The set with every part divided by the common gcd."""
        g = self.gcd_all
        if g == 1:
            return self
        return PartSet(tuple(p // g for p in self.parts))

    def without(self, a: int) -> tuple[int, ...]:
        """Remaining parts after removing a; may be empty."""
        if a not in self.parts:
            raise PartNotInSet(f"{a} is not a part of {self.parts}")
        return tuple(p for p in self.parts if p != a)


def make_part_set(raw: Iterable[int]) -> PartSet:
    """Validate, deduplicate, and sort a collection of parts."""
    items = list(raw)
    if not items:
        raise EmptySet("a part set needs at least one part")
    for p in items:
        if not isinstance(p, int) or p < 1:
            raise NonPositivePart(f"parts must be integers >= 1, got {p!r}")
    return PartSet(tuple(sorted(set(items))))


def _table_for_parts(parts: Sequence[int], n_max: int) -> list[int]:
    """Unbounded-repetition counting table over raw parts (no gcd reduction).

    Entry m is the number of multisets of parts summing to m.  Outer loop over
    parts, inner loop ascending, so each multiset is counted exactly once.
    """
    ways = [0] * (n_max + 1)
    ways[0] = 1
    for a in parts:
        for m in range(a, n_max + 1):
            ways[m] += ways[m - a]
    return ways


def count(a_set: PartSet, n: int) -> int:
    """Number of partitions of n with parts in the set.

    Conventions: 1 at n=0 (the empty partition) and 0 for negative n.  When
    the parts share a common divisor g > 1, the count is 0 unless g divides n,
    and otherwise equals the count for the divided-through set at n/g.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    g = a_set.gcd_all
    if g > 1:
        if n % g:
            return 0
        return count(a_set.reduced(), n // g)
    return _table_for_parts(a_set.parts, n)[n]


def count_table(a_set: PartSet, n_max: int) -> list[int]:
    """Counts for every n from 0 through n_max in one sweep."""
    if n_max < 0:
        raise NegativeBound(f"n_max must be >= 0, got {n_max}")
    return _table_for_parts(a_set.parts, n_max)


def enumerate_partitions(a_set: PartSet, n: int) -> list[Partition]:
    """Every partition of n with parts in the set, by exhaustive backtracking.

    This is the oracle: it realizes the definition directly and shares no code
    with the counting table.  Partitions come out non-increasing, largest
    first part first.  Refuses when the count (cheap to obtain) exceeds
    ORACLE_PARTITION_LIMIT.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    expected = count(a_set, n)
    if expected > ORACLE_PARTITION_LIMIT:
        raise OracleBoundExceeded(
            f"{expected} partitions exceed the enumeration guard of {ORACLE_PARTITION_LIMIT}"
        )
    descending = a_set.parts[::-1]
    out: list[Partition] = []
    prefix: list[int] = []

    def extend(remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a in descending:
            if a <= cap and a <= remaining:
                prefix.append(a)
                extend(remaining - a, a)
                prefix.pop()

    extend(n, descending[0])
    return out


def count_for_parts(parts: Sequence[int], n: int) -> int:
    """Count over a raw (possibly empty) part tuple; empty set counts only n=0."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    if not parts:
        return 0
    return _table_for_parts(parts, n)[n]


def lemma1_split(a_set: PartSet, a: int, n: int) -> tuple[int, int]:
    """Split the count of n at part a: partitions using a, and those avoiding it.

    Returns (count(A, n-a), count(A minus a, n)); the two components sum to
    count(A, n).  When removing a empties the set, the second component falls
    back to the empty-set convention (1 at n=0, else 0).
    """
    if a not in a_set.parts:
        raise PartNotInSet(f"{a} is not a part of {a_set.parts}")
    if a > n:
        raise PartExceedsN(f"part {a} exceeds n={n}")
    rest = a_set.without(a)
    return count(a_set, n - a), count_for_parts(rest, n)


class CountCache:
    """Memoized counting tables keyed by raw part tuple.

    Batch verifiers hit the same part tuples at many arguments; recomputing a
    full table per query would dominate.  Tables grow geometrically and are
    rebuilt from scratch on growth (sweeps are cheap relative to queries).
    """

    def __init__(self) -> None:
        self._tables: dict[tuple[int, ...], list[int]] = {}

    def table(self, parts: tuple[int, ...], n_max: int) -> list[int]:
        tab = self._tables.get(parts)
        if tab is None or len(tab) <= n_max:
            grown = max(n_max, 2 * (len(tab) - 1) if tab else 0, 64)
            tab = _table_for_parts(parts, grown)
            self._tables[parts] = tab
        return tab

    def count(self, parts: tuple[int, ...], n: int) -> int:
        if n < 0:
            return 0
        if n == 0:
            return 1
        if not parts:
            return 0
        return self.table(parts, n)[n]
