"""Keeping a decomposition free of alternating bags while red edges arrive.

An alternating bag is two classes of the decomposition joined by two
vertex-disjoint red edges. The driver inserts the red edges of an instance one
at a time; when an insertion would create a bag it exchanges the red edge's
endpoint ``a`` with a vertex ``c`` of a class ``C`` that forms a compound pair
with the class of ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .graph import Params, TwoColoredInstance
from .tiling import Clazz, Decomposition, almost_ell_decomposition


class NoValidSwap(RuntimeError):
    def __init__(self, edge: tuple[int, int], rejected: int):
        self.edge = edge
        self.rejected = rejected
        super().__init__(f"no exchange keeps the decomposition bag-free after adding red edge {edge} "
                         f"({rejected} candidates rejected)")


@dataclass(frozen=True)
class Bag:
    classP: Clazz
    classQ: Clazz
    redEdge1: tuple[int, int]
    redEdge2: tuple[int, int]


@dataclass
class SwapRecord:
    """One red-edge insertion. ``A`` is None when the edge was committed without a swap."""

    edge: tuple[int, int]
    A: Optional[Clazz] = None
    a: Optional[int] = None
    C: Optional[Clazz] = None
    c: Optional[int] = None
    rejected: int = 0
    # rejections split by cause: the moved vertex's new class, the class it
    # left, or the freshly inserted red edge
    rejected_by: dict[str, int] = field(default_factory=dict)
    side: str = "a"

    def line(self) -> str:
        u, v = self.edge
        if self.A is None:
            return f"ADD R {u} {v} | ok"
        ids = lambda c: ",".join(map(str, c))  # noqa: E731
        text = (f"ADD R {u} {v} | swap A={ids(self.A)} a={self.a} C={ids(self.C)} c={self.c}"
                f" | rejected={self.rejected}")
        if self.side != "a":
            text += f" | side={self.side}"
        return text


@dataclass
class RepairTrace:
    records: list[SwapRecord] = field(default_factory=list)

    def lines(self) -> list[str]:
        return [r.line() for r in self.records]

    def swaps(self) -> list[SwapRecord]:
        return [r for r in self.records if r.A is not None]

    def __len__(self) -> int:
        return len(self.records)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def pair_bag(red: np.ndarray, P: Clazz, Q: Clazz) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """Lexicographically first pair of disjoint red P-Q edges, or None."""
    edges = sorted(_norm(x, y) for x in P for y in Q if red[x, y])
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if not set(e) & set(f):
                return e, f
    return None


def find_alternating_bag(inst: TwoColoredInstance, d: Decomposition) -> Optional[Bag]:
    """First bag by class pair (classes in sorted order), then by edge pair."""
    red = inst.red.adj
    classes = sorted(d.classes)
    for i, P in enumerate(classes):
        for Q in classes[i + 1:]:
            hit = pair_bag(red, P, Q)
            if hit is not None:
                return Bag(P, Q, hit[0], hit[1])
    return None


def _bag_with(red: np.ndarray, classes: list[Clazz], touched: list[int]) -> Optional[tuple[int, int, tuple]]:
    """Bag between a touched class and any other class, as ``(i, j, edges)``."""
    seen = set()
    for i in touched:
        for j, Q in enumerate(classes):
            if j == i or (min(i, j), max(i, j)) in seen:
                continue
            seen.add((min(i, j), max(i, j)))
            hit = pair_bag(red, classes[i], Q)
            if hit is not None:
                return i, j, hit
    return None


@dataclass
class _State:
    blue: np.ndarray
    red: np.ndarray
    classes: list[Clazz]
    owner: dict[int, int]

    @classmethod
    def from_decomposition(cls, blue: np.ndarray, red: np.ndarray, d: Decomposition) -> "_State":
        classes = list(d.classes)
        return cls(blue, red, classes, {v: i for i, c in enumerate(classes) for v in c})

    def would_bag(self, a: int, b: int) -> bool:
        ia, ib = self.owner.get(a), self.owner.get(b)
        if ia is None or ib is None or ia == ib:
            return False
        self.red[a, b] = self.red[b, a] = True
        try:
            return pair_bag(self.red, self.classes[ia], self.classes[ib]) is not None
        finally:
            self.red[a, b] = self.red[b, a] = False

    def partners(self, i: int) -> list[int]:
        rows = self.blue[list(self.classes[i])]
        idx = [j for j, D in enumerate(self.classes) if j != i and rows[:, list(D)].all()]
        return sorted(idx, key=lambda j: self.classes[j][0])

    def try_swap(self, x: int, new_edge: tuple[int, int], record: SwapRecord) -> bool:
        """Move ``x`` into a compound partner of its class; red already holds ``new_edge``."""
        i = self.owner[x]
        X = self.classes[i]
        for j in self.partners(i):
            C = self.classes[j]
            for c in C:
                X2 = tuple(sorted(set(X) - {x} | {c}))
                C2 = tuple(sorted(set(C) - {c} | {x}))
                self.classes[i], self.classes[j] = X2, C2
                hit = _bag_with(self.red, self.classes, [i, j])
                if hit is None:
                    for v in X2:
                        self.owner[v] = i
                    for v in C2:
                        self.owner[v] = j
                    record.A, record.a, record.C, record.c = X, x, C, c
                    return True
                self.classes[i], self.classes[j] = X, C
                record.rejected += 1
                hi, hj, edges = hit
                if new_edge in edges:
                    cause = "new_edge"
                elif j in (hi, hj):
                    cause = "moved_in"
                else:
                    cause = "moved_out"
                record.rejected_by[cause] = record.rejected_by.get(cause, 0) + 1
        return False

    def insert(self, a: int, b: int) -> SwapRecord:
        edge = _norm(a, b)
        record = SwapRecord(edge)
        if not self.would_bag(a, b):
            self.red[a, b] = self.red[b, a] = True
            return record
        self.red[a, b] = self.red[b, a] = True
        if self.try_swap(edge[0], edge, record):
            return record
        if self.try_swap(edge[1], edge, record):
            record.side = "b"
            return record
        self.red[a, b] = self.red[b, a] = False
        raise NoValidSwap(edge, record.rejected)

    def decomposition(self, leftover: tuple[int, ...]) -> Decomposition:
        return Decomposition(tuple(self.classes), leftover)


def lemma3_swap(inst: TwoColoredInstance, d: Decomposition, newRed: tuple[int, int],
                p: Params | None = None) -> tuple[Decomposition, RepairTrace]:
    """Make room for red edge ``newRed`` by one exchange between compound classes.

    ``inst`` is the state before insertion and ``d`` must be bag-free for it.
    Returns ``d`` unchanged with an empty trace when the edge creates no bag.
    When no exchange of the endpoint ``a`` works, the endpoint ``b`` is tried
    with its own class before giving up.
    """
    a, b = _norm(*newRed)
    if inst.blue.has_edge(a, b) or inst.red.has_edge(a, b):
        raise ValueError(f"pair {(a, b)} is already an edge of the instance")
    state = _State.from_decomposition(inst.blue.adj, inst.red.adj.copy(), d)
    if not state.would_bag(a, b):
        return d, RepairTrace()
    record = state.insert(a, b)
    return state.decomposition(d.leftover), RepairTrace([record])


@dataclass(frozen=True)
class InsertionStep:
    """Snapshot handed to instrumentation hooks around one insertion."""

    edge: tuple[int, int]
    classes_before: tuple[Clazz, ...]
    classes_after: tuple[Clazz, ...]
    red_before: np.ndarray
    red_after: np.ndarray
    bag_detected: bool
    record: SwapRecord


def bag_free_decomposition(
    inst: TwoColoredInstance,
    p: Params | int,
    start: Optional[Decomposition] = None,
    on_insert: Optional[Callable[[InsertionStep], None]] = None,
) -> tuple[Decomposition, RepairTrace]:
    """Tile the blue graph, then insert red edges one by one keeping the tiling bag-free.

    Red edges are inserted in lexicographic order. ``start`` overrides the
    initial red-free tiling. Raises RepairFailed from the tiling stage and
    NoValidSwap from the exchange stage.
    """
    d = start if start is not None else almost_ell_decomposition(inst.blue, p)
    red = np.zeros_like(inst.red.adj)
    state = _State.from_decomposition(inst.blue.adj, red, d)
    trace = RepairTrace()
    for a, b in inst.red.edges():
        if on_insert is None:
            trace.records.append(state.insert(a, b))
            continue
        before, red_before = tuple(state.classes), state.red.copy()
        detected = state.would_bag(a, b)
        record = state.insert(a, b)
        trace.records.append(record)
        on_insert(InsertionStep((a, b), before, tuple(state.classes), red_before,
                                state.red.copy(), detected, record))
    return state.decomposition(d.leftover), trace


def parse_trace_line(line: str) -> SwapRecord:
    parts = [s.strip() for s in line.split("|")]
    head = parts[0].split()
    if len(head) != 4 or head[:2] != ["ADD", "R"]:
        raise ValueError(f"bad trace line: {line!r}")
    record = SwapRecord((int(head[2]), int(head[3])))
    if parts[1] == "ok" and len(parts) == 2:
        return record
    fields = dict(tok.split("=", 1) for tok in parts[1].split()[1:])
    record.A = tuple(int(x) for x in fields["A"].split(","))
    record.a = int(fields["a"])
    record.C = tuple(int(x) for x in fields["C"].split(","))
    record.c = int(fields["c"])
    record.rejected = int(parts[2].split("=", 1)[1])
    if len(parts) > 3:
        record.side = parts[3].split("=", 1)[1]
    return record

