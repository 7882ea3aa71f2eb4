"""Brute-force ground truth.

Nothing here calls into the constructive modules: the verifiers re-derive
every property from the raw adjacency matrices, and the exhaustive searches
are plain backtracking. Keep it that way, otherwise differential tests stop
meaning anything.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Optional, Sequence

from .graph import Graph, TwoColoredInstance
from .tiling import Decomposition

DEFAULT_TILING_CAPS = {2: 24}
DEFAULT_TILING_CAP_LARGE_ELL = 18


class CapExceeded(ValueError):
    pass


@dataclass
class Report:
    ok: bool = True
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.violations.append(msg)

    def lines(self) -> list[str]:
        head = "PASS" if self.ok else "FAIL"
        out = [head] + [f"  violation: {v}" for v in self.violations]
        out += [f"  {k}: {v}" for k, v in self.info.items()]
        return out


def verify_decomposition(g: Graph, ell: int, d: Decomposition) -> Report:
    rep = Report()
    m = g.m
    if len(d.classes) != m // ell:
        rep.fail(f"expected {m // ell} classes, found {len(d.classes)}")
    seen: dict[int, int] = {}
    for idx, cls in enumerate(d.classes):
        if len(cls) != ell:
            rep.fail(f"class {idx} {list(cls)} has size {len(cls)}, expected {ell}")
        if len(set(cls)) != len(cls):
            rep.fail(f"class {idx} {list(cls)} repeats a vertex")
        for v in cls:
            if not 0 <= v < m:
                rep.fail(f"class {idx} contains vertex {v} outside 0..{m - 1}")
            elif v in seen and seen[v] != idx:
                rep.fail(f"overlap: vertex {v} lies in classes {seen[v]} and {idx}")
            else:
                seen[v] = idx
        for u, v in combinations(cls, 2):
            if 0 <= u < m and 0 <= v < m and u != v and not g.adj[u, v]:
                rep.fail(f"class {idx} {list(cls)} is not a clique: {u}-{v} missing")
    expected_left = sorted(set(range(m)) - set(seen))
    if sorted(d.leftover) != expected_left:
        rep.fail(f"leftover {list(d.leftover)} does not match uncovered vertices {expected_left}")
    if len(expected_left) != m % ell:
        rep.fail(f"{len(expected_left)} vertices uncovered, expected {m % ell}")
    return rep


def _bags(red, d: Decomposition):
    where = {v: i for i, cls in enumerate(d.classes) for v in cls}
    m = red.shape[0]
    red_edges = [(u, v) for u in range(m) for v in range(u + 1, m) if red[u, v]]
    for e, f in combinations(red_edges, 2):
        if set(e) & set(f):
            continue
        ends = [where.get(x) for x in (*e, *f)]
        if None in ends:
            continue
        pe, qe, pf, qf = ends
        if pe != qe and {pe, qe} == {pf, qf}:
            yield d.classes[pe], d.classes[qe], e, f


def verify_bag_free(inst: TwoColoredInstance, d: Decomposition) -> Report:
    rep = Report()
    for P, Q, e, f in _bags(inst.red.adj, d):
        rep.fail(f"alternating bag: classes {list(P)} and {list(Q)} with red edges {e} and {f}")
        break
    return rep


def verify_papartition_family(n: int, k: int, ell: int, fam: Sequence) -> Report:
    """Checks block sizes, disjointness, global non-repetition, closeness and count."""
    rep = Report()
    blocksets = [[frozenset(b) for b in getattr(P, "blocks", P)] for P in fam]
    used: dict[frozenset, int] = {}
    for idx, blocks in enumerate(blocksets):
        if len(blocks) != ell:
            rep.fail(f"papartition {idx} has {len(blocks)} blocks, expected {ell}")
        for b in blocks:
            if len(b) != k:
                rep.fail(f"papartition {idx} block {sorted(b)} has size {len(b)}, expected {k}")
            if not all(1 <= x <= n for x in b):
                rep.fail(f"papartition {idx} block {sorted(b)} leaves [1..{n}]")
            if b in used:
                rep.fail(f"repetition: {sorted(b)} appears in papartitions {used[b]} and {idx}")
            else:
                used[b] = idx
        for b1, b2 in combinations(blocks, 2):
            if b1 & b2:
                rep.fail(f"papartition {idx} blocks {sorted(b1)} and {sorted(b2)} intersect")
    half = k / 2
    for (i, P), (j, Q) in combinations(enumerate(blocksets), 2):
        if _close(P, Q, half):
            rep.fail(f"papartitions {i} and {j} are too close")
    bound = comb(n, k) // ell
    if len(fam) > bound:
        rep.fail(f"{len(fam)} papartitions exceed the maximum {bound}")
    rep.info["count"] = len(fam)
    rep.info["complete"] = len(fam) == bound
    return rep


def _close(P: list[frozenset], Q: list[frozenset], half: float) -> bool:
    for (A1, B1) in permutations(P, 2):
        for (A2, B2) in permutations(Q, 2):
            if len(A1 & A2) > half and len(B1 & B2) > half:
                return True
    return False


def _cap_for(ell: int) -> int:
    return DEFAULT_TILING_CAPS.get(ell, DEFAULT_TILING_CAP_LARGE_ELL)


def _search(adj, ell: int, red=None) -> Optional[Decomposition]:
    m = adj.shape[0]
    slack = m % ell
    free = [True] * m
    classes: list[tuple[int, ...]] = []
    leftover: list[int] = []
    dead: set[tuple[int, int]] = set()

    def clean_with(new: tuple[int, ...]) -> bool:
        if red is None:
            return True
        for old in classes:
            for x1, x2 in permutations(new, 2):
                if any(red[x1, y1] and red[x2, y2] for y1, y2 in permutations(old, 2)):
                    return False
        return True

    def cliques_from(v: int):
        cand = [w for w in range(v + 1, m) if free[w] and adj[v, w]]

        def grow(chosen: list[int], start: int):
            if len(chosen) == ell:
                yield tuple(chosen)
                return
            for t in range(start, len(cand)):
                w = cand[t]
                if all(adj[w, x] for x in chosen):
                    chosen.append(w)
                    yield from grow(chosen, t + 1)
                    chosen.pop()

        yield from grow([v], 0)

    def key() -> tuple[int, int]:
        return sum(1 << i for i in range(m) if free[i]), len(leftover)

    def rec() -> bool:
        v = next((i for i in range(m) if free[i]), None)
        if v is None:
            return True
        memo = red is None
        if memo and key() in dead:
            return False
        for cls in cliques_from(v):
            if not clean_with(cls):
                continue
            for x in cls:
                free[x] = False
            classes.append(cls)
            if rec():
                return True
            classes.pop()
            for x in cls:
                free[x] = True
        if len(leftover) < slack:
            free[v] = False
            leftover.append(v)
            if rec():
                return True
            leftover.pop()
            free[v] = True
        if memo:
            dead.add(key())
        return False

    if rec():
        return Decomposition(tuple(classes), tuple(sorted(leftover)))
    return None


def exhaustive_tiling(g: Graph, ell: int, cap: Optional[int] = None) -> Optional[Decomposition]:
    """Backtracking search for ``m // ell`` disjoint ell-cliques, lowest vertex first.

    Returns None when no such system exists.
    """
    cap = _cap_for(ell) if cap is None else cap
    if g.m > cap:
        raise CapExceeded(f"m={g.m} exceeds the exhaustive-search cap {cap} for ell={ell}")
    return _search(g.adj, ell)


def exhaustive_bag_free_tiling(inst: TwoColoredInstance, ell: int, cap: Optional[int] = None) -> Optional[Decomposition]:
    """As exhaustive_tiling, but no two classes may span an alternating bag."""
    cap = _cap_for(ell) if cap is None else cap
    if inst.m > cap:
        raise CapExceeded(f"m={inst.m} exceeds the exhaustive-search cap {cap} for ell={ell}")
    found = _search(inst.blue.adj, ell, red=inst.red.adj)
    if found is not None:
        assert verify_bag_free(inst, found).ok
    return found

