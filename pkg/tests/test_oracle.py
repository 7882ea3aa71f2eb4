from itertools import combinations

import numpy as np
import pytest

from cliquetile import oracle
from cliquetile.graph import Graph, TwoColoredInstance
from cliquetile.papartition import Papartition, build_meta_instance, subset_unrank, SubsetUniverse
from cliquetile.repair import find_alternating_bag
from cliquetile.tiling import Decomposition, RepairFailed, almost_ell_decomposition


def test_verify_decomposition_pass():
    assert oracle.verify_decomposition(Graph.complete(6), 2, Decomposition(((0, 1), (2, 3), (4, 5)), ())).ok


def test_verify_decomposition_overlap():
    rep = oracle.verify_decomposition(Graph.complete(6), 2, Decomposition(((0, 1), (1, 2), (4, 5)), (3,)))
    assert not rep.ok and any("overlap" in v for v in rep.violations)


def test_verify_decomposition_not_clique():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    rep = oracle.verify_decomposition(g, 2, Decomposition(((0, 2),), (1,)))
    assert not rep.ok and any("not a clique" in v for v in rep.violations)


def test_verify_decomposition_wrong_count_and_leftover():
    rep = oracle.verify_decomposition(Graph.complete(6), 2, Decomposition(((0, 1), (2, 3)), (4,)))
    assert not rep.ok and len(rep.violations) >= 2


def _inst(m, red):
    return TwoColoredInstance(Graph.complete(m).with_edges(remove=red), Graph.from_edges(m, red))


D4 = Decomposition(((0, 1), (2, 3)), ())


@pytest.mark.parametrize("red,expect_ok", [([(0, 2), (1, 3)], False), ([(0, 2), (0, 3)], True), ([(0, 1)], True)])
def test_bag_verdicts_agree_with_repair_module(red, expect_ok):
    inst = _inst(4, red)
    rep = oracle.verify_bag_free(inst, D4)
    assert rep.ok == expect_ok
    assert rep.ok == (find_alternating_bag(inst, D4) is None)


def test_bag_witness_printed():
    rep = oracle.verify_bag_free(_inst(4, [(0, 2), (1, 3)]), D4)
    assert "(0, 2)" in rep.violations[0] and "(1, 3)" in rep.violations[0]


def test_verify_family_repetition():
    fam = [Papartition.of([[1, 2], [3, 4]]), Papartition.of([[1, 2], [5, 6]])]
    rep = oracle.verify_papartition_family(6, 2, 2, fam)
    assert not rep.ok and any("repetition" in v for v in rep.violations)


def test_verify_family_too_close():
    fam = [Papartition.of([[1, 2, 3], [4, 5, 6]]), Papartition.of([[1, 2, 7], [4, 5, 8]])]
    rep = oracle.verify_papartition_family(8, 3, 2, fam)
    assert not rep.ok and any("too close" in v for v in rep.violations)


def test_exhaustive_tiling_c4():
    c4 = Graph.complete(4).with_edges(remove=[(0, 1), (2, 3)])
    d = oracle.exhaustive_tiling(c4, 2)
    assert d is not None and oracle.verify_decomposition(c4, 2, d).ok


def test_exhaustive_tiling_star_has_none():
    assert oracle.exhaustive_tiling(Graph.from_edges(5, [(0, v) for v in range(1, 5)]), 2) is None


def test_exhaustive_cap():
    with pytest.raises(oracle.CapExceeded):
        oracle.exhaustive_tiling(Graph.complete(30), 2)
    with pytest.raises(oracle.CapExceeded):
        oracle.exhaustive_tiling(Graph.complete(20), 3)
    assert oracle.exhaustive_tiling(Graph.complete(30), 2, cap=30) is not None


def _all_graphs(m):
    pairs = list(combinations(range(m), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(m, [e for i, e in enumerate(pairs) if mask >> i & 1])


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_agreement_on_every_small_graph(m):
    for g in _all_graphs(m):
        exhaustive = oracle.exhaustive_tiling(g, 2)
        try:
            d = almost_ell_decomposition(g, 2)
        except RepairFailed:
            continue
        assert exhaustive is not None
        assert oracle.verify_decomposition(g, 2, d).ok


def test_agreement_sampled_m8():
    rng = np.random.default_rng(8)
    for _ in range(400):
        adj = np.triu(rng.random((8, 8)) < rng.uniform(0.5, 1.0), k=1)
        g = Graph(adj | adj.T)
        try:
            d = almost_ell_decomposition(g, 2)
        except RepairFailed:
            continue
        assert oracle.exhaustive_tiling(g, 2) is not None
        assert oracle.verify_decomposition(g, 2, d).ok


def test_bag_free_search_red_empty_agrees():
    g = Graph.complete(8).with_edges(remove=[(0, 1), (2, 5)])
    inst = TwoColoredInstance(g, Graph.empty(8))
    assert oracle.exhaustive_bag_free_tiling(inst, 2) == oracle.exhaustive_tiling(g, 2)


def test_bag_free_search_k4_meta():
    inst = build_meta_instance(4, 2)
    d = oracle.exhaustive_bag_free_tiling(inst, 2)
    u = SubsetUniverse(4, 2)
    matchings = {frozenset(subset_unrank(u, r) for r in c) for c in d.classes}
    assert matchings == {frozenset({(1, 2), (3, 4)}), frozenset({(1, 3), (2, 4)}), frozenset({(1, 4), (2, 3)})}


def test_bag_free_search_refuses_partial_answers():
    # both perfect matchings of this 4-cycle span a bag with the two red chords
    blue = Graph.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    inst = TwoColoredInstance(blue, Graph.from_edges(4, [(0, 3), (1, 2)]))
    assert oracle.exhaustive_tiling(blue, 2) is not None
    assert oracle.exhaustive_bag_free_tiling(inst, 2) is None
