from __future__ import annotations

import pytest

from geodex.constructions import fixture, g_construction, oriented_bipartite, triangle_expansion
from geodex.digraph import Digraph
from geodex.search import (
    SearchBudget,
    SearchConstraints,
    degree_cap,
    exclusion_bound,
    extremal_search,
    size_chain,
    table,
    verify_extremal_witness,
)
from oracles import naive_census

SMALL = [(n, k) for n in range(2, 6) for k in (2, 3)]


@pytest.mark.parametrize("n, k", SMALL)
@pytest.mark.parametrize("strong, nss", [(False, False), (True, False), (False, True)])
def test_against_naive_census(n, k, strong, nss):
    best, classes = naive_census(n, k, strong=strong, no_sources_sinks=nss)
    rec = extremal_search(SearchConstraints(n, k, require_strong=strong, forbid_sources_sinks=nss), threads=1)
    assert rec.complete
    if best is None:
        assert rec.max_size is None and rec.class_count == 0
    else:
        assert (rec.max_size, rec.class_count) == (best, classes)


@pytest.mark.parametrize("n, k, strong", [(6, 2, False), (7, 2, True), (8, 3, True), (7, 3, False)])
def test_pruning_flags_do_not_change_answers(n, k, strong):
    c = SearchConstraints(n, k, require_strong=strong)
    ref = extremal_search(c, threads=1)
    for pe, pd in [(False, True), (True, False), (False, False)]:
        rec = extremal_search(c, threads=1, prune_exclusion=pe, prune_degree=pd)
        assert (rec.max_size, rec.class_count) == (ref.max_size, ref.class_count)
        assert rec.representatives == ref.representatives


def test_deterministic_and_thread_independent():
    c = SearchConstraints(8, 2, require_strong=True)
    a = extremal_search(c, threads=1)
    b = extremal_search(c, threads=1)
    d = extremal_search(c, threads=2)
    assert a.representatives == b.representatives == d.representatives
    assert a.nodes_explored == b.nodes_explored == d.nodes_explored
    assert a.thresholds == b.thresholds


def test_representatives_are_valid():
    c = SearchConstraints(9, 3, require_strong=True)
    rec = extremal_search(c, threads=1)
    assert rec.max_size == 12
    for g in rec.representatives:
        assert verify_extremal_witness(g, c, rec.max_size)


def test_checkpoint_resume(tmp_path):
    path = str(tmp_path / "ck.bin")
    c = SearchConstraints(9, 2, require_strong=True)
    ref = extremal_search(c, threads=1)
    first = extremal_search(c, threads=1, checkpoint=path)
    second = extremal_search(c, threads=1, checkpoint=path)
    assert first.representatives == second.representatives == ref.representatives
    assert first.nodes_explored == ref.nodes_explored
    with open(path, "rb") as fh:
        assert fh.read(8) == b"GEODEXCK"
    with pytest.raises(ValueError):
        extremal_search(SearchConstraints(9, 3), threads=1, checkpoint=path)
    bad = tmp_path / "bad.bin"
    bad.write_bytes(b"nonsense")
    with pytest.raises(ValueError):
        extremal_search(c, threads=1, checkpoint=str(bad))


def test_budget_gives_partial_record():
    rec = extremal_search(SearchConstraints(10, 2), SearchBudget(max_nodes=50), threads=1)
    assert not rec.complete and rec.status == "node budget exceeded"
    assert rec.max_size is None and rec.representatives == []
    assert rec.upper_bound is not None and rec.upper_bound >= 25
    rec = extremal_search(SearchConstraints(16, 5, require_strong=True), SearchBudget(max_seconds=0.5), threads=1)
    assert rec.status == "time budget exceeded"
    assert rec.to_dict()["max_size"] is None


@pytest.mark.parametrize("backend", ["default", "python"])
def test_time_budget_is_honoured(backend, monkeypatch):
    # large orders reject most candidate children without ticking a node
    import time

    from geodex import _backend, _pykernels

    if backend == "python":
        monkeypatch.setattr(_backend, "kernels_for", lambda n: _pykernels)
    t0 = time.monotonic()
    rec = extremal_search(SearchConstraints(17, 5, require_strong=True), SearchBudget(max_seconds=2.0), threads=1)
    assert rec.status == "time budget exceeded"
    assert time.monotonic() - t0 < 6.0


def test_min_size_census():
    rec = extremal_search(SearchConstraints(7, 2, forbid_sources_sinks=True, min_size=11), threads=1)
    assert (rec.max_size, rec.class_count) == (11, 29)
    rec = extremal_search(SearchConstraints(5, 2, min_size=7), threads=1)
    assert rec.complete and rec.max_size is None and rec.upper_bound is None


def test_order_one_and_errors():
    rec = extremal_search(SearchConstraints(1, 2), threads=1)
    assert (rec.max_size, rec.class_count) == (0, 1)
    assert extremal_search(SearchConstraints(1, 2, forbid_sources_sinks=True), threads=1).max_size is None
    with pytest.raises(ValueError):
        SearchConstraints(5, 1)
    with pytest.raises(ValueError):
        SearchConstraints(0, 2)
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)


def test_verify_witness():
    c = SearchConstraints(12, 3, require_strong=True)
    g = g_construction(12, 3).digraph
    assert verify_extremal_witness(g, c, 20)
    assert not verify_extremal_witness(g, c, 21)
    assert not verify_extremal_witness(g, SearchConstraints(12, 4, require_strong=True), 20)
    assert not verify_extremal_witness(oriented_bipartite(3, 3, 0).digraph,
                                       SearchConstraints(6, 2, require_strong=True), 9)
    assert verify_extremal_witness(triangle_expansion(4).digraph,
                                   SearchConstraints(9, 2, forbid_sources_sinks=True), 18)
    assert not verify_extremal_witness(fixture("C3").digraph, SearchConstraints(4, 2), 3)
    assert not verify_extremal_witness(Digraph(2, (0, 0)), SearchConstraints(2, 2, forbid_sources_sinks=True), 0)


def test_helpers():
    assert size_chain(4, 4) == [0, 0, 1, 2, 4]
    chain = size_chain(12, 20)
    assert chain[12] == 20 and all(a <= b for a, b in zip(chain, chain[1:]))
    assert exclusion_bound(10, 9, 20) == 25
    assert exclusion_bound(9, 8, 16) == 20
    with pytest.raises(ValueError):
        exclusion_bound(5, 6, 3)
    assert degree_cap(9, 2) == 4
    assert degree_cap(12, 3) >= 3


def test_table_skips_small_orders():
    recs = table([2, 3], 3, 5, strong=True)
    cells = {(r.constraints.n, r.constraints.k): r.max_size for r in recs}
    assert cells == {(3, 2): 3, (4, 2): 4, (4, 3): 4, (5, 2): 6, (5, 3): 5}
