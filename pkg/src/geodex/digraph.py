"""Dense digraphs stored as bit rows.

Row ``u`` of a :class:`Digraph` is a Python integer whose bit ``v`` is set
iff the arc ``u -> v`` is present.  Values are immutable; every builder
returns a new digraph.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

__all__ = [
    "DegreeProfile",
    "Digraph",
    "DigraphError",
    "add_arc",
    "converse",
    "directed_girth",
    "induced_subdigraph",
    "is_strongly_connected",
    "new_digraph",
    "sources_and_sinks",
    "underlying_contains_diamond",
]


class DigraphError(ValueError):
    """Raised for loops, out-of-range vertices and malformed row data."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DegreeProfile:
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]

    @property
    def max_out(self) -> int:
        return max(self.out_degrees, default=0)

    @property
    def max_in(self) -> int:
        return max(self.in_degrees, default=0)

    @property
    def is_diregular(self) -> bool:
        degs = set(self.out_degrees) | set(self.in_degrees)
        return len(degs) <= 1


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DigraphError(f"negative vertex count {self.n}")
        if len(self.rows) != self.n:
            raise DigraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise DigraphError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise DigraphError(f"loop at vertex {u}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        rows = [0] * n
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    @property
    def in_rows(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for u, row in enumerate(self.rows):
            bit = 1 << u
            for v in iter_bits(row):
                cols[v] |= bit
        return tuple(cols)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.rows) for v in iter_bits(row)]

    def out_neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def in_neighbors(self, v: int) -> list[int]:
        return [u for u, row in enumerate(self.rows) if row >> v & 1]

    def out_degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def in_degree(self, v: int) -> int:
        return sum(row >> v & 1 for row in self.rows)

    def degree_profile(self) -> DegreeProfile:
        return DegreeProfile(
            tuple(row.bit_count() for row in self.rows),
            tuple(col.bit_count() for col in self.in_rows),
        )

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Digraph:
        """Return the digraph with vertex ``u`` renamed ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabelling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u, row in enumerate(self.rows):
            rows[perm[u]] = sum(1 << perm[v] for v in iter_bits(row))
        return Digraph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def _check_vertex(n: int, u: int) -> None:
    if not 0 <= u < n:
        raise DigraphError(f"vertex {u} out of range for n={n}")


def new_digraph(n: int) -> Digraph:
    if n < 0:
        raise DigraphError(f"negative vertex count {n}")
    return Digraph(n, (0,) * n)


def add_arc(g: Digraph, u: int, v: int) -> Digraph:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise DigraphError(f"loop at vertex {u}")
    rows = list(g.rows)
    rows[u] |= 1 << v
    return Digraph(g.n, tuple(rows))


def converse(g: Digraph) -> Digraph:
    return Digraph(g.n, g.in_rows)


def sources_and_sinks(g: Digraph) -> tuple[set[int], set[int]]:
    cols = g.in_rows
    sources = {v for v in range(g.n) if cols[v] == 0}
    sinks = {u for u in range(g.n) if g.rows[u] == 0}
    return sources, sinks


def _reach(rows: tuple[int, ...], start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= rows[w]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    # n = 0 is vacuously strong
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _reach(g.rows, 0) == full and _reach(g.in_rows, 0) == full


def induced_subdigraph(g: Digraph, s: Iterable[int]) -> Digraph:
    """Subdigraph induced on ``s``, re-indexed in increasing vertex order."""
    keep = sorted(set(s))
    for u in keep:
        _check_vertex(g.n, u)
    index = {u: i for i, u in enumerate(keep)}
    rows = []
    for u in keep:
        rows.append(sum(1 << index[v] for v in iter_bits(g.rows[u]) if v in index))
    return Digraph(len(keep), tuple(rows))


def _underlying(g: Digraph) -> list[int]:
    cols = g.in_rows
    return [g.rows[u] | cols[u] for u in range(g.n)]


def underlying_contains_diamond(g: Digraph) -> bool:
    """True iff the underlying graph contains K4 minus an edge.

    That happens exactly when some edge lies in two triangles, i.e. its
    endpoints have two common neighbours.
    """
    nbr = _underlying(g)
    for u in range(g.n):
        for v in iter_bits(nbr[u]):
            if v > u and (nbr[u] & nbr[v]).bit_count() >= 2:
                return True
    return False


def directed_girth(g: Digraph) -> float | int:
    """Length of a shortest directed cycle, ``math.inf`` if acyclic."""
    best = math.inf
    for s in range(g.n):
        # BFS from s; a cycle through s closes on an arc back to s
        seen = 1 << s
        frontier = 1 << s
        dist = 0
        while frontier and dist + 1 < best:
            dist += 1
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.rows[w]
            if nxt >> s & 1:
                best = dist
                break
            frontier = nxt & ~seen
            seen |= frontier
    return best
