"""Text and JSON formats for instances, decompositions, papartition families and wreaths.

Every ``format_*`` output ends with exactly one newline and parses back to an
equal object.
"""
from __future__ import annotations

import json
from typing import Iterable

import numpy as np

from .graph import Graph, InvalidInstance, Params, TwoColoredInstance
from .papartition import Papartition
from .repair import RepairTrace, parse_trace_line
from .tiling import Decomposition
from .wreath import Wreath


class FormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(lineno, f"expected an integer, got {tok!r}") from None


# instances ------------------------------------------------------------------

def format_instance(inst: TwoColoredInstance, p: Params) -> str:
    lines = [f"m {inst.m} ell {p.ell} alpha {p.alpha!r}"]
    lines += [f"B {u} {v}" for u, v in inst.blue.edges()]
    lines += [f"R {u} {v}" for u, v in inst.red.edges()]
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> tuple[TwoColoredInstance, Params]:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(1, "empty instance file") from None
    toks = header.split()
    if len(toks) != 6 or toks[0::2] != ["m", "ell", "alpha"]:
        raise FormatError(lineno, "header must be 'm <m> ell <ell> alpha <alpha>'")
    m, ell = _int(toks[1], lineno), _int(toks[3], lineno)
    try:
        alpha = float(toks[5])
        p = Params(ell, alpha)
    except ValueError as exc:
        raise FormatError(lineno, str(exc)) from None
    if m < 1:
        raise FormatError(lineno, "m must be positive")
    blue = np.zeros((m, m), dtype=bool)
    red = np.zeros((m, m), dtype=bool)
    for lineno, line in lines:
        toks = line.split()
        if len(toks) != 3 or toks[0] not in ("B", "R"):
            raise FormatError(lineno, f"expected 'B u v' or 'R u v', got {line!r}")
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        if not (0 <= u < v < m):
            raise FormatError(lineno, f"need 0 <= u < v < {m}, got {u} {v}")
        adj = blue if toks[0] == "B" else red
        if adj[u, v]:
            raise FormatError(lineno, f"duplicate edge {u} {v}")
        other = red if toks[0] == "B" else blue
        if other[u, v]:
            raise FormatError(lineno, f"pair {u} {v} is both blue and red")
        adj[u, v] = adj[v, u] = True
    try:
        inst = TwoColoredInstance(Graph(blue), Graph(red))
    except InvalidInstance as exc:
        raise FormatError(0, str(exc)) from None
    return inst, p


def instance_to_json(inst: TwoColoredInstance, p: Params) -> dict:
    return {"m": inst.m, "ell": p.ell, "alpha": p.alpha,
            "blue": [list(e) for e in inst.blue.edges()],
            "red": [list(e) for e in inst.red.edges()]}


def instance_from_json(obj: dict) -> tuple[TwoColoredInstance, Params]:
    m = obj["m"]
    inst = TwoColoredInstance(Graph.from_edges(m, map(tuple, obj["blue"])),
                              Graph.from_edges(m, map(tuple, obj["red"])))
    return inst, Params(obj["ell"], obj["alpha"])


# decompositions ---------------------------------------------------------------

def format_decomposition(d: Decomposition) -> str:
    lines = [" ".join(map(str, c)) for c in sorted(tuple(sorted(c)) for c in d.classes)]
    left = " ".join(map(str, sorted(d.leftover))) or "-"
    lines.append(f"leftover: {left}")
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> Decomposition:
    classes = []
    leftover = None
    for lineno, line in _content_lines(text):
        if line.startswith("leftover:"):
            if leftover is not None:
                raise FormatError(lineno, "second leftover line")
            rest = line[len("leftover:"):].split()
            leftover = [] if rest == ["-"] else [_int(t, lineno) for t in rest]
            continue
        if leftover is not None:
            raise FormatError(lineno, "class line after the leftover line")
        classes.append(tuple(sorted(_int(t, lineno) for t in line.split())))
    if leftover is None:
        raise FormatError(0, "missing 'leftover:' line")
    return Decomposition.make(classes, leftover)


def decomposition_to_json(d: Decomposition) -> dict:
    return {"classes": [list(c) for c in sorted(d.classes)], "leftover": sorted(d.leftover)}


def decomposition_from_json(obj: dict) -> Decomposition:
    return Decomposition.make(obj["classes"], obj["leftover"])


# papartitions -----------------------------------------------------------------

def format_papartitions(fam: Iterable[Papartition]) -> str:
    lines = [" | ".join(" ".join(map(str, b)) for b in P.blocks) for P in fam]
    return "".join(line + "\n" for line in lines)


def parse_papartitions(text: str) -> list[Papartition]:
    fam = []
    for lineno, line in _content_lines(text):
        blocks = [[_int(t, lineno) for t in part.split()] for part in line.split("|")]
        try:
            fam.append(Papartition.of(blocks))
        except ValueError as exc:
            raise FormatError(lineno, str(exc)) from None
    return fam


def papartitions_to_json(fam: Iterable[Papartition]) -> dict:
    return {"papartitions": [[list(b) for b in P.blocks] for P in fam]}


def papartitions_from_json(obj: dict) -> list[Papartition]:
    return [Papartition.of(blocks) for blocks in obj["papartitions"]]


# repair traces ----------------------------------------------------------------

def format_trace(trace: RepairTrace) -> str:
    return "".join(line + "\n" for line in trace.lines())


def parse_trace(text: str) -> RepairTrace:
    records = []
    for lineno, line in _content_lines(text):
        try:
            records.append(parse_trace_line(line))
        except (ValueError, KeyError, IndexError) as exc:
            raise FormatError(lineno, str(exc)) from None
    return RepairTrace(records)


# wreaths ----------------------------------------------------------------------

def format_wreaths(n: int, k: int, ws: Iterable[Wreath]) -> str:
    lines = [f"n {n} k {k}"]
    lines += [f"start {w.start} order {' '.join(map(str, w.order))}" for w in ws]
    return "\n".join(lines) + "\n"


def parse_wreaths(text: str) -> tuple[int, int, list[Wreath]]:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(1, "empty wreath file") from None
    toks = header.split()
    if len(toks) != 4 or toks[0::2] != ["n", "k"]:
        raise FormatError(lineno, "header must be 'n <n> k <k>'")
    n, k = _int(toks[1], lineno), _int(toks[3], lineno)
    ws = []
    for lineno, line in lines:
        toks = line.split()
        if len(toks) < 4 or toks[0] != "start" or toks[2] != "order":
            raise FormatError(lineno, "expected 'start <s> order <ids>'")
        order = tuple(_int(t, lineno) for t in toks[3:])
        if len(order) != n:
            raise FormatError(lineno, f"order has {len(order)} elements, expected {n}")
        ws.append(Wreath(order, _int(toks[1], lineno), k))
    return n, k, ws


def wreaths_to_json(n: int, k: int, ws: Iterable[Wreath]) -> dict:
    return {"n": n, "k": k, "wreaths": [{"order": list(w.order), "start": w.start} for w in ws]}


def wreaths_from_json(obj: dict) -> tuple[int, int, list[Wreath]]:
    k = obj["k"]
    return obj["n"], k, [Wreath(tuple(w["order"]), w["start"], k) for w in obj["wreaths"]]


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
