"""Brute-force reference for CIS(G, k) and counting identities.

Deliberately naive and independent of the enumerators and of the graph
module's traversal code: every k-subset is a bitmask, connectivity is a
bitmask flood fill.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .graph import Graph

__all__ = [
    "OracleResult",
    "OracleRefused",
    "IdentityMismatch",
    "brute_force_cise",
    "count_identities",
    "count_connected_sets",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 24


class OracleRefused(ValueError):
    """The graph is too large for subset enumeration."""


class IdentityMismatch(AssertionError):
    def __init__(self, name: str, expected: int, actual: int):
        self.name, self.expected, self.actual = name, expected, actual
        super().__init__(f"{name}: expected {expected}, got {actual}")


@dataclass
class OracleResult:
    sets: list[tuple[int, ...]]
    count: int


def _masks(g: Graph) -> list[int]:
    rows = []
    for nbrs in g.adjacency:
        row = 0
        for w in nbrs:
            row |= 1 << w
        rows.append(row)
    return rows


def _connected(mask: int, rows: list[int]) -> bool:
    reached = mask & -mask
    while True:
        grow = reached
        rest = reached
        while rest:
            low = rest & -rest
            grow |= rows[low.bit_length() - 1]
            rest ^= low
        grow &= mask
        if grow == reached:
            return reached == mask
        reached = grow


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def brute_force_cise(g: Graph, k: int, max_n: int = DEFAULT_MAX_N) -> OracleResult:
    """All connected k-subsets, as ascending tuples in lexicographic order."""
    if g.n > max_n:
        raise OracleRefused(f"oracle limited to n <= {max_n}, graph has n={g.n}")
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in 1..{g.n}, got {k}")
    rows = _masks(g)
    found = []
    # Gosper's hack walks the k-bit masks in colexicographic order
    mask = (1 << k) - 1
    limit = 1 << g.n
    while mask < limit:
        if _connected(mask, rows):
            found.append(_members(mask))
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)
    found.sort()
    return OracleResult(found, len(found))


def count_connected_sets(g: Graph) -> dict[int, int]:
    """Count connected vertex sets of every order by unbounded growth.

    Sets are grown one neighbour at a time from singletons and
    deduplicated by bitmask; independent of the subset scan above.
    """
    rows = _masks(g)
    seen = {1 << v for v in range(g.n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for mask in frontier:
            border = 0
            rest = mask
            while rest:
                low = rest & -rest
                border |= rows[low.bit_length() - 1]
                rest ^= low
            border &= ~mask
            while border:
                low = border & -border
                border ^= low
                grown = mask | low
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    counts = {k: 0 for k in range(1, g.n + 1)}
    for mask in seen:
        counts[bin(mask).count("1")] += 1
    return counts


def count_identities(
    g: Graph,
    count: Callable[[int], int],
    deletable: int | None = None,
) -> dict[str, tuple[int, int]]:
    """Check |CIS(G,1)| = n, |CIS(G,2)| = m, |CIS(G,n)| = 1 and
    |CIS(G,n-1)| = number of non-articulation points.

    ``count(k)`` is any enumerator's count; ``deletable`` defaults to a
    brute-force count of non-cut vertices.  Raises
    :class:`IdentityMismatch` at the first failure, otherwise returns
    ``{name: (expected, actual)}``.
    """
    if deletable is None:
        rows = _masks(g)
        full = (1 << g.n) - 1
        deletable = 1 if g.n == 1 else sum(
            _connected(full & ~(1 << v), rows) for v in range(g.n))
    checks = [("CIS(G,1)=n", 1, g.n), ("CIS(G,n)=1", g.n, 1)]
    if g.n >= 2:
        checks.insert(1, ("CIS(G,2)=m", 2, g.m))
        checks.append(("CIS(G,n-1)=deletable", g.n - 1, deletable))
    results = {}
    for name, k, expected in checks:
        actual = count(k)
        if actual != expected:
            raise IdentityMismatch(name, expected, actual)
        results[name] = (expected, actual)
    return results


def subset_bound(n: int, k: int) -> int:
    return comb(n, k)
