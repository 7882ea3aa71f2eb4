from itertools import combinations
from math import lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquetile.wreath import (
    BudgetExceeded,
    Wreath,
    read_ledger,
    search_wreaths,
    verify_wreath_decomposition,
    wreath_decomposition_search,
    wreath_expand,
)


def test_expand_k_divides_n():
    assert wreath_expand(Wreath((1, 2, 3, 4), 0, 2)) == [(1, 2), (3, 4)]


def test_expand_two_rounds():
    assert wreath_expand(Wreath((1, 2, 3, 4, 5), 0, 2)) == [(1, 2), (3, 4), (1, 5), (2, 3), (4, 5)]


def test_expand_n6_k4():
    assert wreath_expand(Wreath(tuple(range(1, 7)), 0, 4)) == [(1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6)]


@st.composite
def wreaths(draw):
    n = draw(st.integers(1, 9))
    k = draw(st.integers(1, n))
    order = tuple(draw(st.permutations(range(1, n + 1))))
    return Wreath(order, draw(st.integers(0, n - 1)), k)


@given(wreaths())
def test_expansion_length_and_partition(w):
    exp = wreath_expand(w)
    assert len(exp) == lcm(w.n, w.k) // w.k
    if w.n % w.k == 0:
        flat = [x for s in exp for x in s]
        assert sorted(flat) == list(range(1, w.n + 1))


@given(wreaths(), st.integers(0, 20))
def test_rotation_invariance(w, shift):
    s = shift % w.n
    rotated = Wreath(w.order[s:] + w.order[:s], (w.start - s) % w.n, w.k)
    assert wreath_expand(rotated) == wreath_expand(w)


def _brute_partition_check(n, k, ws):
    got = sorted(s for w in ws for s in wreath_expand(w))
    return got == sorted(combinations(range(1, n + 1), k))


def test_verify_n4_k2():
    ws = [Wreath((1, 2, 3, 4), 0, 2), Wreath((2, 3, 1, 4), 0, 2), Wreath((1, 3, 2, 4), 0, 2)]
    assert _brute_partition_check(4, 2, ws)
    assert verify_wreath_decomposition(4, 2, ws).ok


def test_verify_duplicate_wreath():
    w = Wreath((1, 2, 3, 4), 0, 2)
    rep = verify_wreath_decomposition(4, 2, [w, w, Wreath((1, 3, 2, 4), 0, 2)])
    assert not rep.ok and any("multiplicity" in v for v in rep.violations)


def test_verify_missing_subsets():
    rep = verify_wreath_decomposition(4, 2, [Wreath((1, 2, 3, 4), 0, 2)])
    assert not rep.ok
    assert any("uncovered" in v and "[1, 3]" in v for v in rep.violations)


def test_verify_rejects_non_permutation():
    rep = verify_wreath_decomposition(4, 2, [Wreath((1, 2, 3), 0, 2)])
    assert not rep.ok


@given(wreaths())
def test_expansions_never_repeat_a_subset(w):
    exp = wreath_expand(w)
    assert len(set(exp)) == len(exp)


@pytest.mark.parametrize("n,k,count", [(3, 3, 1), (4, 2, 3), (5, 2, 2)])
def test_search_small_cases(n, k, count):
    ws = wreath_decomposition_search(n, k)
    assert ws is not None and len(ws) == count
    assert verify_wreath_decomposition(n, k, ws).ok
    assert _brute_partition_check(n, k, ws)


@pytest.mark.parametrize("n,k", [(6, 2), (6, 3), (7, 3)])
def test_search_further_cases_verified(n, k):
    out = search_wreaths(n, k, budget=200_000)
    if out.status == "found":
        assert verify_wreath_decomposition(n, k, out.wreaths).ok


def test_budget_exceeded_is_distinct(tmp_path):
    ledger = tmp_path / "ledger.txt"
    with pytest.raises(BudgetExceeded):
        wreath_decomposition_search(6, 3, cap=1, ledger=ledger)
    wreath_decomposition_search(4, 2, ledger=ledger, seed=5)
    rows = read_ledger(ledger)
    assert rows[0][:3] == (6, 3, "budget")
    assert rows[1][:3] == (4, 2, "found") and rows[1][4] == 5


def test_search_is_deterministic():
    assert search_wreaths(5, 2).wreaths == search_wreaths(5, 2).wreaths
