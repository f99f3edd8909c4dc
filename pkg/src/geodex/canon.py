"""Exact canonical forms for isomorphism rejection."""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .digraph import Digraph

__all__ = ["CanonicalForm", "automorphism_orbits", "canonical_digraph", "canonical_form", "is_isomorphic"]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Adjacency rows of the canonical relabelling.

    Two digraphs have equal forms iff they are isomorphic; the comparison
    is on the full rows, never on a hash.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def bytes(self) -> bytes:
        width = (self.n + 7) // 8
        return self.n.to_bytes(4, "big") + b"".join(r.to_bytes(width, "big") for r in self.rows)

    def digraph(self) -> Digraph:
        return Digraph(self.n, self.rows)


def _label(g: Digraph):
    return _backend.canonical_labeling(g.rows, g.n)


def canonical_form(g: Digraph) -> CanonicalForm:
    _, cert, _ = _label(g)
    return CanonicalForm(g.n, tuple(cert))


def canonical_digraph(g: Digraph) -> Digraph:
    return canonical_form(g).digraph()


def automorphism_orbits(g: Digraph) -> list[int]:
    """``orbits[v]`` is the least vertex in the automorphism orbit of ``v``."""
    return list(_label(g)[2])


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
