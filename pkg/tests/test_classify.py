"""Enumeration, closed forms, atlases, and the theorem verifier."""

import pytest

from wogideals import (
    GF2,
    RATIONALS,
    Atlas,
    EnumerationConfig,
    closed_form_bpt_unweighted,
    closed_form_bpt_wo,
    closed_form_dd_unweighted,
    closed_form_dd_wo,
    closed_form_ddr_wo,
    closed_form_tree_unweighted,
    closed_form_tree_wo,
    compute_atlas,
    compute_betti_size_set,
    compute_dd_set,
    compute_ddr_set,
    enumerate_connected_graphs,
    enumerate_wogs,
    graph_invariants,
    graph_to_json,
    verify_theorem,
)
from wogideals.errors import (
    InvalidParameters,
    NOutOfScope,
    NTooLarge,
    UnknownTheorem,
)


def test_connected_graph_counts():
    assert len(list(enumerate_connected_graphs(2))) == 1
    assert len(list(enumerate_connected_graphs(3))) == 2
    assert len(list(enumerate_connected_graphs(3, dedup=False))) == 4
    assert len(list(enumerate_connected_graphs(4))) == 6
    assert len(list(enumerate_connected_graphs(4, dedup=False))) == 38
    assert len(list(enumerate_connected_graphs(5))) == 21
    with pytest.raises(NTooLarge):
        list(enumerate_connected_graphs(8))


def test_representatives_are_canonical_and_connected():
    reps = list(enumerate_connected_graphs(4))
    labeled = set(enumerate_connected_graphs(4, dedup=False))
    assert set(reps) <= labeled
    assert all(len({v for e in edges for v in e}) == 4 for edges in reps)


def test_wog_counts():
    assert sum(1 for _ in enumerate_wogs(EnumerationConfig(2, 2))) == 8
    assert sum(1 for _ in enumerate_wogs(EnumerationConfig(3, 2))) == 96
    tree_cfg = EnumerationConfig(3, 1, class_filter="tree")
    assert sum(1 for _ in enumerate_wogs(tree_cfg)) == 4


def test_config_validation():
    with pytest.raises(InvalidParameters):
        EnumerationConfig(1)
    with pytest.raises(InvalidParameters):
        EnumerationConfig(3, 0)
    with pytest.raises(InvalidParameters):
        EnumerationConfig(3, 1, class_filter="chordal")


def test_closed_form_dd_unweighted():
    assert closed_form_dd_unweighted(4) == {(1, 1), (1, 2), (2, 2), (1, 3)}
    assert closed_form_dd_unweighted(2) == {(1, 1)}
    for n in range(2, 9):
        pairs = closed_form_dd_unweighted(n)
        for b in range(1, n):
            boundary = b + 1 - -(-b // (n - b))
            if boundary >= 1:
                assert (min(boundary, b), b) in pairs


def test_closed_form_dd_wo():
    assert closed_form_dd_wo(4) == {
        (0, 1),
        (0, 2),
        (1, 1),
        (1, 2),
        (2, 2),
        (1, 3),
    }
    assert closed_form_dd_wo(2) == {(1, 1)}


def test_closed_form_ddr_wo():
    triples = closed_form_ddr_wo(4, 3)
    assert (0, 1, 3) in triples and (0, 2, 3) in triples
    assert not any(a == 0 and c < 3 for a, b, c in triples)
    assert {(1, 1, c) for c in (1, 2, 3)} <= triples


def test_closed_form_tree_and_bipartite():
    assert closed_form_tree_wo(5, 3) == {(p, r) for p in (3, 4) for r in (1, 2, 3)}
    expected = {(p, r) for p in (2, 3) for r in range(1, 6)} | {(4, 4), (4, 5)}
    assert closed_form_bpt_wo(4, 5) == expected
    for n in range(4, 9):
        assert (n, 3) not in closed_form_bpt_wo(n, 8)
        assert (n, 4) in closed_form_bpt_wo(n, 8)
    with pytest.raises(NOutOfScope):
        closed_form_tree_wo(3, 3)
    with pytest.raises(NOutOfScope):
        closed_form_bpt_wo(3, 3)


def test_unweighted_tree_and_bipartite_closed_forms_match_enumeration():
    assert closed_form_tree_unweighted(4) == {(2, 1), (3, 1)}
    assert closed_form_bpt_unweighted(5) == {(3, 1), (3, 2), (4, 1)}
    for n in (4, 5):
        tree_cfg = EnumerationConfig(n, 1, class_filter="tree")
        assert compute_betti_size_set(tree_cfg).tuple_set() == closed_form_tree_unweighted(n)
        bpt_cfg = EnumerationConfig(n, 1, class_filter="bipartite")
        assert compute_betti_size_set(bpt_cfg).tuple_set() == closed_form_bpt_unweighted(n)


def test_dd_set_small():
    atlas = compute_dd_set(EnumerationConfig(4, 2))
    assert atlas.tuple_set() == closed_form_dd_wo(4)


def test_ddr_set_single_edge():
    atlas = compute_ddr_set(EnumerationConfig(2, 3))
    assert atlas.tuple_set() == {(1, 1, 1), (1, 1, 2), (1, 1, 3)}


def test_betti_size_set_small_trees():
    atlas = compute_betti_size_set(EnumerationConfig(4, 3, class_filter="tree"))
    truncated = {t for t in atlas.tuple_set() if t[1] <= 3}
    assert truncated == {(p, r) for p in (2, 3) for r in (1, 2, 3)}


def test_atlas_witnesses_and_merge():
    cfg = EnumerationConfig(3, 2)
    atlas = compute_ddr_set(cfg)
    assert atlas.reverify() == []
    # merge is first-wins and associative on tuple sets
    half = Atlas(atlas.n, atlas.projection, cfg)
    for tup, witness in list(atlas.tuples.items())[:2]:
        half.add(tup, witness)
    merged = half.merge(atlas)
    assert merged.tuple_set() == atlas.tuple_set()
    assert merged.tuples[next(iter(half.tuples))] == half.tuples[next(iter(half.tuples))]
    with pytest.raises(InvalidParameters):
        half.merge(Atlas(7, atlas.projection, cfg))


def test_atlas_json_and_csv():
    atlas = compute_dd_set(EnumerationConfig(3, 2))
    data = atlas.to_json()
    back = Atlas.from_json(data)
    assert back.tuple_set() == atlas.tuple_set()
    assert {t: graph_to_json(w) for t, w in back.tuples.items()} == {
        t: graph_to_json(w) for t, w in atlas.tuples.items()
    }
    csv = atlas.to_csv()
    assert csv.splitlines()[0] == "depth,dim"


def test_parallel_matches_sequential():
    cfg = EnumerationConfig(4, 2)
    seq = compute_atlas(cfg, "ddr", GF2, jobs=1)
    par = compute_atlas(cfg, "ddr", GF2, jobs=2)
    assert seq.tuple_set() == par.tuple_set()
    assert {t: graph_to_json(w) for t, w in seq.tuples.items()} == {
        t: graph_to_json(w) for t, w in par.tuples.items()
    }


def test_verify_dd_small():
    report = verify_theorem("dd_wo", EnumerationConfig(4, 2))
    assert report.passed and not report.inconclusive
    assert report.exit_code == 0
    assert report.realized == report.expected == 6
    assert report.checked == 2304


def test_verify_dd_low_weight_cap_is_inconclusive():
    report = verify_theorem("dd_wo", EnumerationConfig(4, 1))
    assert report.passed and report.inconclusive
    assert report.exit_code == 3
    assert set(map(tuple, report.unrealized)) == {(0, 1), (0, 2)}
    assert "INCONCLUSIVE" in report.to_text()


def test_verify_ddr_small():
    report = verify_theorem("ddr_wo", EnumerationConfig(3, 3, reg_cap=3))
    assert report.passed and not report.inconclusive


def test_verify_requires_reg_cap_for_infinite_coordinates():
    with pytest.raises(InvalidParameters):
        verify_theorem("ddr_wo", EnumerationConfig(3, 2))


def test_verify_depth_zero_and_pseudoforest_small():
    report = verify_theorem("depth_zero_characterization", EnumerationConfig(3, 3))
    assert report.passed and report.checked == 324
    report = verify_theorem("pseudoforest_formulas", EnumerationConfig(4, 2))
    assert report.passed and report.checked > 0


def test_verify_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        verify_theorem("riemann", EnumerationConfig(3, 1))


def test_unweighted_recovery_small():
    atlas = compute_dd_set(EnumerationConfig(4, 1))
    assert atlas.tuple_set() == closed_form_dd_unweighted(4)


def test_invariants_respect_depth_dim_order():
    for graph in list(enumerate_wogs(EnumerationConfig(3, 2)))[::7]:
        inv = graph_invariants(graph, RATIONALS)
        assert inv.depth + inv.pdim == graph.n
        if inv.depth >= 1:
            assert inv.depth <= inv.dim
        assert inv.reg >= 1
        assert inv.project("dd") == (inv.depth, inv.dim)
        assert inv.project("betti_size") == (inv.pdim, inv.reg)
