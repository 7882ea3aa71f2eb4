import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquetile import formats
from cliquetile.graph import Params, random_dense_instance
from cliquetile.papartition import construct_papartitions
from cliquetile.repair import bag_free_decomposition
from cliquetile.tiling import Decomposition, almost_ell_decomposition
from cliquetile.wreath import search_wreaths

configs = st.sampled_from([(2, 0.1), (2, 0.2), (3, 0.05), (3, 0.1)])


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 40), configs, st.integers(0, 3), st.integers(0, 2**32))
def test_instance_round_trip(m, la, red_max, seed):
    p = Params(*la)
    inst = random_dense_instance(max(m, p.ell), p, red_max, seed)
    text = formats.format_instance(inst, p)
    assert text.endswith("\n") and not text.endswith("\n\n")
    inst2, p2 = formats.parse_instance(text)
    assert inst2 == inst and p2 == p
    assert formats.format_instance(inst2, p2) == text
    inst3, p3 = formats.instance_from_json(json.loads(formats.dumps(formats.instance_to_json(inst, p))))
    assert inst3 == inst and p3 == p


@settings(max_examples=25, deadline=None)
@given(st.integers(6, 40), configs, st.integers(0, 2**32))
def test_decomposition_round_trip(m, la, seed):
    p = Params(*la)
    d = almost_ell_decomposition(random_dense_instance(m, p, 0, seed).blue, p)
    text = formats.format_decomposition(d)
    d2 = formats.parse_decomposition(text)
    assert d2 == d.canonical()
    assert formats.format_decomposition(d2) == text
    assert formats.decomposition_from_json(formats.decomposition_to_json(d)) == d.canonical()


def test_decomposition_text_layout():
    d = Decomposition(((4, 5), (0, 3)), (6,))
    assert formats.format_decomposition(d) == "0 3\n4 5\nleftover: 6\n"
    assert formats.format_decomposition(Decomposition(((0, 1),), ())) == "0 1\nleftover: -\n"


@pytest.mark.parametrize("n,k,ell", [(4, 2, 2), (6, 2, 2), (15, 2, 3)])
def test_papartition_round_trip(n, k, ell):
    fam = construct_papartitions(n, k, ell)
    text = formats.format_papartitions(fam)
    assert formats.parse_papartitions(text) == fam
    assert formats.papartitions_from_json(formats.papartitions_to_json(fam)) == fam


def test_papartition_line_layout():
    assert formats.format_papartitions(construct_papartitions(4, 2, 2)).splitlines()[0] == "1 2 | 3 4"


def test_trace_round_trip():
    p = Params(2, 0.2)
    for seed in range(10):
        _, trace = bag_free_decomposition(random_dense_instance(60, p, 1, seed), p)
        text = formats.format_trace(trace)
        assert formats.format_trace(formats.parse_trace(text)) == text


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (3, 3)])
def test_wreath_round_trip(n, k):
    ws = search_wreaths(n, k).wreaths
    text = formats.format_wreaths(n, k, ws)
    assert formats.parse_wreaths(text) == (n, k, ws)
    assert formats.wreaths_from_json(formats.wreaths_to_json(n, k, ws)) == (n, k, ws)


def test_comments_and_blank_lines():
    text = "# generated\nm 4 ell 2 alpha 0.1\n\nB 0 1  # blue\nR 2 3\n"
    inst, p = formats.parse_instance(text)
    assert inst.blue.has_edge(0, 1) and inst.red.has_edge(2, 3) and p.alpha == 0.1


@pytest.mark.parametrize("text,lineno", [
    ("m 4 ell 2\n", 1),
    ("m 4 ell 2 alpha 0.1\nB 0 x\n", 2),
    ("m 4 ell 2 alpha 0.1\nB 0 1\nG 1 2\n", 3),
    ("m 4 ell 2 alpha 0.1\nB 2 1\n", 2),
    ("m 4 ell 2 alpha 0.1\nB 0 4\n", 2),
    ("m 4 ell 2 alpha 0.1\nB 0 1\nR 0 1\n", 3),
    ("m 4 ell 2 alpha 0.1\nB 0 1\nB 0 1\n", 3),
    ("m 4 ell 2 alpha 0.5\n", 1),
])
def test_instance_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(formats.FormatError) as info:
        formats.parse_instance(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}:")


def test_decomposition_parse_errors():
    with pytest.raises(formats.FormatError):
        formats.parse_decomposition("0 1\n")
    with pytest.raises(formats.FormatError) as info:
        formats.parse_decomposition("0 1\nleftover: -\n2 3\n")
    assert info.value.lineno == 3


def test_papartition_parse_error():
    with pytest.raises(formats.FormatError) as info:
        formats.parse_papartitions("1 2 | 3 4\n1 2 | 2 3\n")
    assert info.value.lineno == 2
