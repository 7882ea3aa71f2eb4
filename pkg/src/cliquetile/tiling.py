"""Almost-ell-decompositions by delete-and-repair.

Start from the complete graph on ``m`` vertices tiled by consecutive blocks,
delete the non-edges of the target graph one at a time, and whenever a
deletion breaks a class ``A`` find a class ``B`` joined to ``A`` by all
``ell**2`` cross edges and retile ``A | B`` into two cliques that separate the
endpoints of the deleted edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .graph import Graph, Params

Clazz = tuple[int, ...]


class TilingError(RuntimeError):
    pass


class NoPartner(TilingError):
    """No class spans a complete bipartite graph with the broken class."""


class RepairFailed(TilingError):
    def __init__(self, edge: tuple[int, int], clazz: Clazz, msg: str = ""):
        self.edge = edge
        self.clazz = clazz
        super().__init__(msg or f"cannot repair class {list(clazz)} after deleting edge {edge}")


class PreconditionViolated(TilingError):
    pass


@dataclass(frozen=True)
class Decomposition:
    """Pairwise disjoint classes of size ell plus the uncovered vertices."""

    classes: tuple[Clazz, ...]
    leftover: tuple[int, ...]

    @classmethod
    def make(cls, classes: Iterable[Iterable[int]], leftover: Iterable[int]) -> "Decomposition":
        return cls(tuple(tuple(sorted(c)) for c in classes), tuple(sorted(leftover)))

    def canonical(self) -> "Decomposition":
        return Decomposition(tuple(sorted(self.classes)), self.leftover)

    @property
    def ell(self) -> int:
        return len(self.classes[0]) if self.classes else 0

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}


def is_clique(g: Graph | np.ndarray, s: Iterable[int]) -> bool:
    adj = g.adj if isinstance(g, Graph) else g
    idx = list(s)
    if len(idx) <= 1:
        return True
    sub = adj[np.ix_(idx, idx)]
    return bool(sub.sum() == len(idx) * (len(idx) - 1))


def consecutive_tiling(m: int, ell: int) -> Decomposition:
    q = m // ell
    classes = tuple(tuple(range(i * ell, (i + 1) * ell)) for i in range(q))
    return Decomposition(classes, tuple(range(q * ell, m)))


def find_bipartite_partner(classes: list[Clazz], virtual_g: Graph | np.ndarray, A: Clazz) -> Clazz:
    """First class B != A (in list order) with every A-B pair an edge."""
    adj = virtual_g.adj if isinstance(virtual_g, Graph) else virtual_g
    if A not in classes:
        raise ValueError(f"class {list(A)} is not in the class list")
    rows = adj[list(A)]
    for B in classes:
        if B == A:
            continue
        if rows[:, list(B)].all():
            return B
    raise NoPartner(f"no class is completely joined to {list(A)}")


def retile_pair(A: Clazz, B: Clazz, e: tuple[int, int], virtual_g_after_delete: Graph | np.ndarray) -> tuple[Clazz, Clazz]:
    """Split ``A | B`` into two cliques with the endpoints of ``e`` on different sides.

    The first new class is ``a`` plus the ``ell - 1`` smallest other vertices
    (never ``b``); the second is the rest.
    """
    adj = virtual_g_after_delete.adj if isinstance(virtual_g_after_delete, Graph) else virtual_g_after_delete
    a, b = e
    if a not in A or b not in A:
        raise PreconditionViolated(f"edge {e} is not inside class {list(A)}")
    union = sorted(set(A) | set(B))
    if len(union) != len(A) + len(B):
        raise PreconditionViolated("classes overlap")
    sub = adj[np.ix_(union, union)].copy()
    ia, ib = union.index(a), union.index(b)
    if sub[ia, ib]:
        raise PreconditionViolated(f"edge {e} is still present")
    sub[ia, ib] = sub[ib, ia] = True
    if sub.sum() != len(union) * (len(union) - 1):
        raise PreconditionViolated(f"{union} is not a complete graph minus {e}")
    rest = [v for v in union if v != a and v != b]
    first = tuple(sorted([a] + rest[: len(A) - 1]))
    second = tuple(sorted(set(union) - set(first)))
    return first, second


def almost_ell_decomposition(
    g: Graph,
    p: Params | int,
    on_step: Optional[Callable[[tuple[int, int], list[Clazz], np.ndarray], None]] = None,
) -> Decomposition:
    """Tile ``g`` with ``m // ell`` vertex-disjoint copies of ``K_ell``.

    ``on_step(edge, classes, virtual_adj)`` is called after every deletion and
    exists for instrumented test runs.

    Raises RepairFailed when some broken class has no completely joined
    partner. That cannot happen when the minimum degree is at least
    ``m * ((ell^2 - 1)/ell^2 + alpha)`` and ``m > 2 * (ell - 1) / alpha``.
    """
    ell = p if isinstance(p, int) else p.ell
    m = g.m
    start = consecutive_tiling(m, ell)
    classes = list(start.classes)
    owner = {v: i for i, c in enumerate(classes) for v in c}
    virtual = ~np.eye(m, dtype=bool)

    for a, b in g.non_edges():
        virtual[a, b] = virtual[b, a] = False
        ia, ib = owner.get(a), owner.get(b)
        if ia is not None and ia == ib:
            A = classes[ia]
            try:
                B = find_bipartite_partner(classes, virtual, A)
            except NoPartner:
                raise RepairFailed((a, b), A) from None
            jb = classes.index(B)
            new_a, new_b = retile_pair(A, B, (a, b), virtual)
            classes[ia], classes[jb] = new_a, new_b
            for v in new_a:
                owner[v] = ia
            for v in new_b:
                owner[v] = jb
        if on_step is not None:
            on_step((a, b), classes, virtual)

    return Decomposition(tuple(classes), start.leftover)

