import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquetile.compound import ClassNotInDecomposition, compound_partners, lemma2_lower_bound
from cliquetile.graph import Graph, Params, random_dense_instance
from cliquetile.tiling import Decomposition, almost_ell_decomposition

D6 = Decomposition(((0, 1), (2, 3), (4, 5)), ())


def test_complete_graph_partners():
    assert compound_partners(Graph.complete(6), D6, (0, 1)) == [(2, 3), (4, 5)]


def test_missing_cross_edge_drops_partner():
    g = Graph.complete(6).with_edges(remove=[(0, 2)])
    assert compound_partners(g, D6, (0, 1)) == [(4, 5)]


def test_unknown_class():
    with pytest.raises(ClassNotInDecomposition):
        compound_partners(Graph.complete(6), D6, (0, 2))


def test_compound_partner_bound_values():
    assert lemma2_lower_bound(100, Params(2, 0.1)) == pytest.approx(18)
    assert lemma2_lower_bound(100, Params(3, 0.05)) == pytest.approx(9)
    assert lemma2_lower_bound(10, Params(3, 0.05)) == pytest.approx(1.5 - 6)


@settings(max_examples=40, deadline=None)
@given(st.integers(20, 60), st.sampled_from([(2, 0.1), (2, 0.2), (3, 0.05), (3, 0.1)]), st.integers(0, 2**32))
def test_partner_count_bound_and_symmetry(m, la, seed):
    p = Params(*la)
    inst = random_dense_instance(m, p, 0, seed)
    d = almost_ell_decomposition(inst.blue, p)
    bound = lemma2_lower_bound(m, p)
    partners = {C: compound_partners(inst.blue, d, C) for C in d.classes}
    for C, ds in partners.items():
        # count by brute force over all cross pairs
        direct = sum(1 for D in d.classes if D != C and all(inst.blue.adj[x, y] for x in C for y in D))
        assert len(ds) == direct
        assert len(ds) >= bound
        for D in ds:
            assert C in partners[D]
