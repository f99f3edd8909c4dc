from __future__ import annotations

import math

import pytest
from hypothesis import given

from conftest import digraphs
from geodex.constructions import oriented_bipartite, permutation_digraph
from geodex.digraph import (
    Digraph,
    DigraphError,
    add_arc,
    converse,
    directed_girth,
    induced_subdigraph,
    is_strongly_connected,
    new_digraph,
    sources_and_sinks,
    underlying_contains_diamond,
)
from geodex.geodecity import is_k_geodetic
from oracles import arcs_of, nx_strong


def cycle(n):
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def test_new_digraph():
    assert new_digraph(0).n == 0 and new_digraph(0).m == 0
    assert (new_digraph(5).n, new_digraph(5).m) == (5, 0)
    full = new_digraph(3)
    for u in range(3):
        for v in range(3):
            if u != v:
                full = add_arc(full, u, v)
    assert full.m == 6
    with pytest.raises(DigraphError):
        new_digraph(-1)


def test_add_arc():
    g = add_arc(new_digraph(2), 0, 1)
    assert g.m == 1
    assert add_arc(g, 0, 1).m == 1
    with pytest.raises(DigraphError, match="loop"):
        add_arc(g, 0, 0)
    with pytest.raises(DigraphError, match="out of range"):
        add_arc(g, 0, 2)


def test_constructor_validation():
    with pytest.raises(DigraphError):
        Digraph(2, (1, 0))  # loop at 0
    with pytest.raises(DigraphError):
        Digraph(2, (4, 0))  # bit outside range
    with pytest.raises(DigraphError):
        Digraph(2, (0,))


def test_values_are_immutable():
    g = new_digraph(2)
    with pytest.raises(AttributeError):
        g.n = 3  # type: ignore[misc]
    add_arc(g, 0, 1)
    assert g.m == 0


def test_converse_examples():
    c3 = cycle(3)
    rev = converse(c3)
    assert set(rev.arcs()) == {(1, 0), (2, 1), (0, 2)}


def test_sources_and_sinks():
    assert sources_and_sinks(Digraph.from_arcs(2, [(0, 1)])) == ({0}, {1})
    assert sources_and_sinks(cycle(3)) == (set(), set())
    for n in range(2, 9):
        a, b = (n + 1) // 2, n // 2
        g = converse(oriented_bipartite(a, b, 0).digraph)  # all arcs X -> Y
        src, snk = sources_and_sinks(g)
        assert (len(src), len(snk)) == (a, b)


def test_strong_connectivity(drawings):
    for n in range(1, 8):
        assert is_strongly_connected(cycle(n) if n > 1 else new_digraph(1))
    assert is_strongly_connected(new_digraph(0))
    assert is_strongly_connected(drawings["strong_even_8"])
    assert is_strongly_connected(oriented_bipartite(4, 4, 4).digraph)
    assert not is_strongly_connected(Digraph.from_arcs(2, [(0, 1)]))


def test_induced_subdigraph():
    g = permutation_digraph(2, 2).digraph
    assert set(induced_subdigraph(g, range(g.n)).arcs()) == set(g.arcs())
    assert induced_subdigraph(g, []).n == 0
    with pytest.raises(DigraphError):
        induced_subdigraph(g, [99])
    # deleting two vertices from a 2-geodetic order-10 digraph leaves at most 16 arcs
    big = oriented_bipartite(5, 5, 3).digraph
    assert is_k_geodetic(big, 2).is_k_geodetic
    for drop in [(0, 1), (0, 5), (8, 9)]:
        h = induced_subdigraph(big, [v for v in range(10) if v not in drop])
        assert h.m <= 16


def test_diamond(drawings):
    assert underlying_contains_diamond(drawings["diamond"])
    assert not underlying_contains_diamond(cycle(3))
    for name in ("p22", "A6", "B62", "C6", "D6", "strong_even_8", "triangle_expansion_9", "two_triangles_6"):
        assert not underlying_contains_diamond(drawings[name])


def test_directed_girth(drawings):
    assert directed_girth(cycle(3)) == 3
    assert directed_girth(Digraph.from_arcs(4, [(0, 1), (1, 2), (0, 2), (2, 3)])) == math.inf
    assert directed_girth(drawings["p22"]) == 3


@given(digraphs())
def test_degree_sums(g):
    prof = g.degree_profile()
    assert sum(prof.out_degrees) == sum(prof.in_degrees) == g.m == len(arcs_of(g))


@given(digraphs())
def test_converse_properties(g):
    c = converse(g)
    assert converse(c) == g
    assert is_strongly_connected(g) == is_strongly_connected(c) == nx_strong(g)
    assert underlying_contains_diamond(g) == underlying_contains_diamond(c)
    assert directed_girth(g) == directed_girth(c)
    assert set(induced_subdigraph(g, range(g.n)).arcs()) == set(g.arcs())


@given(digraphs(min_n=1, max_n=6))
def test_directed_girth_matches_walks(g):
    # shortest closed walk length equals shortest cycle length
    best = math.inf
    a = [[g.has_arc(u, v) for v in range(g.n)] for u in range(g.n)]
    reach = a
    for length in range(1, g.n + 1):
        if any(reach[v][v] for v in range(g.n)):
            best = length
            break
        reach = [[any(reach[u][w] and a[w][v] for w in range(g.n)) for v in range(g.n)] for u in range(g.n)]
    assert directed_girth(g) == best


@given(digraphs(min_n=2, max_n=8))
def test_source_or_sink_blocks_strong(g):
    src, snk = sources_and_sinks(g)
    if src or snk:
        assert not is_strongly_connected(g)
