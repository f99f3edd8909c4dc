"""k-geodecity tests, geodetic girth and hoof witnesses."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from ._pykernels import first_violation
from .digraph import Digraph

__all__ = ["GeodecityReport", "Walk", "geodetic_girth", "is_k_geodetic", "walk_count_matrix"]


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_walk_in(self, g: Digraph) -> bool:
        return len(self.vertices) >= 1 and all(
            g.has_arc(u, v) for u, v in zip(self.vertices, self.vertices[1:])
        )


@dataclass(frozen=True)
class GeodecityReport:
    """Verdict for one ``k``; ``witness`` is set exactly when the check fails."""

    is_k_geodetic: bool
    k: int
    witness: tuple[Walk, Walk] | None = None

    def to_dict(self) -> dict:
        return {
            "is_k_geodetic": self.is_k_geodetic,
            "k": self.k,
            "witness": None if self.witness is None else [list(w.vertices) for w in self.witness],
        }


def is_k_geodetic(g: Digraph, k: int) -> GeodecityReport:
    """Check that every ordered pair has at most one walk of length <= k.

    The length-0 walk counts, so a closed walk of length <= k is a
    violation.  On failure the report carries two distinct walks with the
    same ends.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if _backend.geodetic_ok(g.rows, g.n, k):
        return GeodecityReport(True, k)
    pair = first_violation(g.rows, g.n, k)
    assert pair is not None
    return GeodecityReport(False, k, (Walk(tuple(pair[0])), Walk(tuple(pair[1]))))


def geodetic_girth(g: Digraph) -> int | float:
    """Largest k for which ``g`` is k-geodetic; ``math.inf`` if there is none.

    An n-geodetic digraph has no cycle of length <= n, hence no cycle at
    all, and then every walk is a path of length < n.  So checking k up to
    n settles every k.
    """
    if g.n < 1:
        raise ValueError("geodetic girth needs at least one vertex")
    for k in range(1, g.n + 1):
        if not _backend.geodetic_ok(g.rows, g.n, k):
            return k - 1
    return math.inf


def walk_count_matrix(g: Digraph, k: int) -> np.ndarray:
    """Entry (u, v) is the number of u->v walks of length 0..k, capped at 2."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.arcs():
        a[u, v] = 1
    power = np.eye(g.n, dtype=np.int64)
    total = power.copy()
    for _ in range(k):
        # capping before the product is safe: every entry is a non-negative count
        power = np.minimum(power @ a, 2)
        total = np.minimum(total + power, 2)
    return total
