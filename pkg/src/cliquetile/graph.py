"""Dense graphs, two-colored instances and the degree conditions of the tiling theorem.

Vertices are the integers ``0..m-1``. Adjacency is a dense boolean matrix,
which is the right trade-off at desk scale: every algorithm in this package
probes the ``ell**2`` cross pairs between two classes over and over.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

import numpy as np


class InstanceInfeasible(ValueError):
    """Raised when a generator cannot meet its constraints."""


class InvalidInstance(ValueError):
    """Raised when a pair is both blue and red, or the graphs disagree on m."""


def as_fraction(x: float) -> Fraction:
    # alpha is usually typed as a short decimal; keep 0.1 equal to 1/10
    return Fraction(repr(float(x)))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on ``m`` vertices with a read-only adjacency matrix."""

    adj: np.ndarray

    def __post_init__(self) -> None:
        adj = np.array(self.adj, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if np.any(np.diag(adj)):
            raise ValueError("adjacency must be irreflexive")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.setflags(write=False)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def empty(cls, m: int) -> "Graph":
        return cls(np.zeros((m, m), dtype=bool))

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls(~np.eye(m, dtype=bool))

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = np.zeros((m, m), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def m(self) -> int:
        return self.adj.shape[0]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, k=1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        """Non-adjacent pairs ``(u, v)``, ``u < v``, in lexicographic order."""
        missing = np.triu(~self.adj, k=1)
        us, vs = np.nonzero(missing)
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v

    def complement(self) -> "Graph":
        return Graph(~self.adj & ~np.eye(self.m, dtype=bool))

    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> "Graph":
        adj = self.adj.copy()
        for u, v in add:
            adj[u, v] = adj[v, u] = True
        for u, v in remove:
            adj[u, v] = adj[v, u] = False
        return Graph(adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"Graph(m={self.m}, edges={self.edge_count()})"


@dataclass(frozen=True)
class TwoColoredInstance:
    """Blue graph G1 and red graph G2 on one vertex set, with disjoint edge sets."""

    blue: Graph
    red: Graph

    def __post_init__(self) -> None:
        if self.blue.m != self.red.m:
            raise InvalidInstance("blue and red graphs have different vertex counts")
        both = np.triu(self.blue.adj & self.red.adj, k=1)
        if both.any():
            u, v = (int(x) for x in np.argwhere(both)[0])
            raise InvalidInstance(f"pair ({u}, {v}) is both blue and red")

    @property
    def m(self) -> int:
        return self.blue.m


@dataclass(frozen=True)
class Params:
    """Class size ``ell`` and slack ``alpha`` with ``0 < alpha < 1/ell**2``.

    ``k`` and ``n`` are only meaningful for the papartition reduction.
    """

    ell: int
    alpha: float
    k: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise ValueError(f"ell must be at least 2, got {self.ell}")
        if not 0 < as_fraction(self.alpha) < Fraction(1, self.ell**2):
            raise ValueError(f"alpha must lie in (0, 1/ell^2) = (0, {1 / self.ell**2:g}), got {self.alpha}")


@dataclass(frozen=True)
class ConditionReport:
    delta1: int
    delta2_max: int
    eq1_threshold: float
    eq2_threshold: Optional[float]
    eq1_ok: bool
    eq2_ok: bool
    eq2_undefined: bool = False
    notes: tuple[str, ...] = field(default=())


def min_degree(g: Graph) -> int:
    if g.m == 0:
        return 0
    return int(g.degrees().min())


def max_degree(g: Graph) -> int:
    if g.m == 0:
        return 0
    return int(g.degrees().max())


def min_degree_threshold(m: int, p: Params) -> Fraction:
    """Exact value of ``m * ((ell^2 - 1)/ell^2 + alpha)``."""
    ell2 = p.ell * p.ell
    return m * (Fraction(ell2 - 1, ell2) + as_fraction(p.alpha))


def red_degree_threshold(m: int, p: Params) -> Optional[float]:
    """``sqrt((m*alpha - ell)/3)``, or None when the radicand is negative."""
    radicand = (m * as_fraction(p.alpha) - p.ell) / 3
    if radicand < 0:
        return None
    return math.sqrt(radicand)


def check_degree_conditions(inst: TwoColoredInstance, p: Params) -> ConditionReport:
    m = inst.m
    delta1 = min_degree(inst.blue)
    delta2 = max_degree(inst.red)
    eq1 = min_degree_threshold(m, p)
    eq2 = red_degree_threshold(m, p)
    notes = []
    if eq2 is None:
        notes.append("red-degree condition unsatisfiable: m*alpha - ell < 0")
        eq2_ok = False
    else:
        # compare squares exactly: delta2 <= sqrt(r)  <=>  delta2^2 <= r
        eq2_ok = delta2 * delta2 <= (m * as_fraction(p.alpha) - p.ell) / 3
    return ConditionReport(
        delta1=delta1,
        delta2_max=delta2,
        eq1_threshold=float(eq1),
        eq2_threshold=eq2,
        eq1_ok=delta1 >= eq1,
        eq2_ok=eq2_ok,
        eq2_undefined=eq2 is None,
        notes=tuple(notes),
    )


def complement_degree_budget(m: int, p: Params) -> int:
    """Largest non-edge degree the generator may use.

    The nominal budget is ``floor(m * (1/ell^2 - alpha))``. It is tightened so
    that the resulting blue minimum degree reaches the exact threshold, and
    clipped at zero when the threshold exceeds ``m - 1``.
    """
    nominal = math.floor(m * (Fraction(1, p.ell**2) - as_fraction(p.alpha)))
    exact = m - 1 - math.ceil(min_degree_threshold(m, p))
    return max(0, min(nominal, exact))


def _random_bounded_degree(m: int, pairs: list[tuple[int, int]], cap: int, rng: np.random.Generator,
                           degree: np.ndarray) -> list[tuple[int, int]]:
    chosen = []
    if cap <= 0 or not pairs:
        return chosen
    for idx in rng.permutation(len(pairs)).tolist():
        u, v = pairs[idx]
        if degree[u] < cap and degree[v] < cap:
            degree[u] += 1
            degree[v] += 1
            chosen.append((u, v))
    return chosen


def random_dense_instance(m: int, p: Params, target_red_max_degree: int, seed: int) -> TwoColoredInstance:
    """Seeded random instance whose blue graph satisfies the minimum-degree condition.

    The blue graph is the complement of a random graph with bounded degree.
    Red edges are drawn on non-blue pairs first. Vertices still below the red
    target may then recolour a blue edge red, but only when both endpoints keep
    the blue minimum degree above the threshold.
    """
    if m < p.ell:
        raise InstanceInfeasible(f"m={m} is smaller than ell={p.ell}")
    if target_red_max_degree < 0:
        raise InstanceInfeasible("target red degree must be non-negative")
    rng = np.random.default_rng(seed)
    all_pairs = [(u, v) for u in range(m) for v in range(u + 1, m)]

    budget = complement_degree_budget(m, p)
    missing = _random_bounded_degree(m, all_pairs, budget, rng, np.zeros(m, dtype=int))
    blue = ~np.eye(m, dtype=bool)
    for u, v in missing:
        blue[u, v] = blue[v, u] = False

    red = np.zeros((m, m), dtype=bool)
    red_deg = np.zeros(m, dtype=int)
    free = [(u, v) for u, v in all_pairs if not blue[u, v]]
    for u, v in _random_bounded_degree(m, free, target_red_max_degree, rng, red_deg):
        red[u, v] = red[v, u] = True

    if target_red_max_degree > 0 and (red_deg < target_red_max_degree).any():
        need = math.ceil(min_degree_threshold(m, p))
        blue_deg = blue.sum(axis=1)
        conflict = [(u, v) for u, v in all_pairs if blue[u, v]]
        for idx in rng.permutation(len(conflict)).tolist():
            u, v = conflict[idx]
            if red_deg[u] >= target_red_max_degree or red_deg[v] >= target_red_max_degree:
                continue
            if blue_deg[u] - 1 < need or blue_deg[v] - 1 < need:
                continue
            blue[u, v] = blue[v, u] = False
            blue_deg[u] -= 1
            blue_deg[v] -= 1
            red[u, v] = red[v, u] = True
            red_deg[u] += 1
            red_deg[v] += 1

    return TwoColoredInstance(Graph(blue), Graph(red))
