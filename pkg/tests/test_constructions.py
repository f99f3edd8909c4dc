from __future__ import annotations

import itertools

import pytest

from geodex.canon import is_isomorphic
from geodex.constructions import (
    ConstructionError,
    ConstructionSpec,
    Family,
    build,
    family_A,
    family_B,
    family_B_prime,
    family_C,
    family_D,
    fixture,
    g_construction,
    moore_bound,
    oriented_bipartite,
    permutation_digraph,
    triangle_expansion,
)
from geodex.digraph import converse, is_strongly_connected, sources_and_sinks, underlying_contains_diamond
from geodex.geodecity import geodetic_girth, is_k_geodetic
from oracles import nx_isomorphic


@pytest.mark.parametrize("name, build_it", [
    ("hoof", lambda: fixture("Hoof")),
    ("c3", lambda: fixture("C3")),
    ("diamond", lambda: fixture("Diamond")),
    ("two_triangles_6", lambda: fixture("TwoTrianglesMatched6")),
    ("p22", lambda: permutation_digraph(2, 2)),
    ("strong_even_8", lambda: oriented_bipartite(4, 4, 4)),
    ("triangle_expansion_9", lambda: triangle_expansion(4)),
    ("A6", lambda: family_A(6)),
    ("B62", lambda: family_B(6, 2)),
    ("C6", lambda: family_C(6)),
    ("D6", lambda: family_D(6)),
    ("G33_6", lambda: g_construction(33, 6)),
    ("G24_6", lambda: g_construction(24, 6)),
])
def test_matches_reference_drawing(drawings, name, build_it):
    g = build_it().digraph
    ref = drawings[name]
    assert (g.n, g.m) == (ref.n, ref.m)
    assert nx_isomorphic(g, ref)
    assert is_isomorphic(g, ref)


def test_permutation_digraph():
    ld = permutation_digraph(2, 2)
    assert (ld.digraph.n, ld.digraph.m) == (12, 24)
    assert "01" in ld.labels
    i, j = ld.labels.index("01"), ld.labels.index("12")
    assert ld.digraph.has_arc(i, j)
    g = permutation_digraph(3, 2).digraph
    assert (g.n, g.m) == (20, 60)
    assert g.degree_profile().is_diregular and is_k_geodetic(g, 2).is_k_geodetic
    for d, k in [(2, 2), (3, 2), (2, 3), (4, 2)]:
        g = permutation_digraph(d, k).digraph
        assert g.n >= moore_bound(d, k)
    with pytest.raises(ConstructionError):
        permutation_digraph(1, 2)
    with pytest.raises(ConstructionError):
        permutation_digraph(2, 1)


def test_oriented_bipartite():
    for n in range(4, 12):
        a, b = (n + 1) // 2, n // 2
        for t in range(b + 1):
            g = oriented_bipartite(a, b, t).digraph
            assert g.m == n * n // 4
            assert is_k_geodetic(g, 2).is_k_geodetic
    for r in range(2, 7):
        assert is_strongly_connected(oriented_bipartite(r, r, r).digraph)
    src, snk = sources_and_sinks(oriented_bipartite(3, 4, 0).digraph)
    assert (len(src), len(snk)) == (4, 3)
    assert geodetic_girth(oriented_bipartite(3, 4, 0).digraph) == float("inf")
    with pytest.raises(ConstructionError):
        oriented_bipartite(2, 3, 3)
    with pytest.raises(ConstructionError):
        oriented_bipartite(0, 3, 0)


def test_triangle_expansion():
    g = triangle_expansion(4).digraph
    assert (g.n, g.m) == (9, 18) and is_strongly_connected(g) and is_k_geodetic(g, 2).is_k_geodetic
    g = triangle_expansion(5).digraph
    assert (g.n, g.m) == (11, 27) and sources_and_sinks(g) == (set(), set())
    for r in range(2, 9):
        g = triangle_expansion(r).digraph
        assert g.m == r * r + 2 and is_strongly_connected(g) and is_k_geodetic(g, 2).is_k_geodetic
    with pytest.raises(ConstructionError):
        triangle_expansion(1)


def _family_list(r):
    return ([family_A(r), family_C(r), family_D(r)] + [family_B(r, t) for t in range(r)]
            + [family_B_prime(r, t) for t in range(1, r - 1)])


def test_families_valid():
    for r in range(3, 9):
        for ld in _family_list(r):
            g = ld.digraph
            assert (g.n, g.m) == (2 * r + 1, r * r + 2)
            assert is_k_geodetic(g, 2).is_k_geodetic
            assert sources_and_sinks(g) == (set(), set())
            assert not underlying_contains_diamond(g)
            assert bool(ld.warnings) == (r < 5)


def test_family_converses():
    for r in range(5, 8):
        assert is_isomorphic(family_A(r).digraph, converse(family_A(r).digraph))
        assert is_isomorphic(family_C(r).digraph, converse(family_C(r).digraph))
        assert is_isomorphic(family_D(r).digraph, converse(family_D(r).digraph))
        for t in range(r):
            assert is_isomorphic(converse(family_B(r, t).digraph), family_B_prime(r, t).digraph)
        assert is_isomorphic(family_B_prime(r, 0).digraph, family_B(r, 0).digraph)
        assert is_isomorphic(family_B_prime(r, r - 1).digraph, family_B(r, r - 1).digraph)


def test_families_pairwise_distinct_r5():
    fams = [ld.digraph for ld in _family_list(5)]
    assert len(fams) == 11
    for a, b in itertools.combinations(fams, 2):
        assert not nx_isomorphic(a, b)


def test_family_parameter_errors():
    with pytest.raises(ConstructionError):
        family_A(2)
    with pytest.raises(ConstructionError):
        family_B(5, 5)
    with pytest.raises(ConstructionError):
        family_B(5, -1)


def test_g_construction_examples():
    g = g_construction(33, 6)
    assert (g.digraph.n, g.digraph.m) == (33, 51)
    assert (g_construction(24, 6).digraph.m) == 32
    assert g_construction(12, 3).digraph.m == 20
    assert "u_{5,6}" in g.labels and "v_3" in g.labels
    with pytest.raises(ConstructionError):
        g_construction(11, 4)  # r = 2, s = 3
    with pytest.raises(ConstructionError):
        g_construction(3, 3)
    with pytest.raises(ConstructionError):
        g_construction(10, 1)


def test_g_construction_variant_differs_but_stays_valid():
    a = g_construction(33, 6).digraph
    b = g_construction(33, 6, rule_iii_to_first=True).digraph
    assert a.m == b.m and not is_isomorphic(a, b)
    assert is_k_geodetic(b, 6).is_k_geodetic and is_strongly_connected(b)


def test_fixtures():
    g = fixture("TwoTrianglesMatched6").digraph
    assert (g.n, g.m) == (6, 9) and is_k_geodetic(g, 2).is_k_geodetic
    assert geodetic_girth(fixture("C3").digraph) == 2
    assert underlying_contains_diamond(fixture("Diamond").digraph)
    with pytest.raises(ConstructionError):
        fixture("Nope")


def test_moore_bound():
    assert moore_bound(2, 2) == 7
    assert [moore_bound(1, k) for k in range(5)] == [1, 2, 3, 4, 5]
    assert moore_bound(3, 2) == 13
    with pytest.raises(ConstructionError):
        moore_bound(0, 2)


def test_build_dispatch():
    ld = build(ConstructionSpec(Family.G_CONSTRUCTION, {"n": 33, "k": 6}))
    assert ld.digraph.m == 51
    assert build(ConstructionSpec(Family.FIXTURE, {"name": "C3"})).digraph.m == 3
    with pytest.raises(ConstructionError):
        build(ConstructionSpec(Family.FAMILY_B, {"r": 5}))


def test_labels_unique():
    for ld in [permutation_digraph(2, 3), g_construction(33, 6), family_A(6), oriented_bipartite(3, 3, 1)]:
        assert len(set(ld.labels)) == ld.digraph.n
