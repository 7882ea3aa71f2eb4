"""Families of (k, ell) partial partitions of [n] that are pairwise not too close.

A (k, ell)-papartition is ``ell`` pairwise disjoint k-subsets of [n]. Two of
them are too close when distinct members ``A1, B1`` of one and distinct
members ``A2, B2`` of the other satisfy ``|A1 & A2| > k/2`` and
``|B1 & B2| > k/2``.

The construction works on the meta-instance whose vertices are all k-subsets
(ids are colexicographic ranks): blue pairs are disjoint subsets, red pairs
share more than k/2 elements. A blue ``K_ell`` is exactly a papartition and a
bag between two classes is exactly a too-close pair, so a bag-free tiling of
the meta-instance decodes to the family we want.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from . import oracle
from .graph import Graph, Params, TwoColoredInstance
from .repair import NoValidSwap, RepairTrace, bag_free_decomposition
from .tiling import Decomposition, RepairFailed

log = logging.getLogger(__name__)

DEFAULT_INSTANCE_CAP = 100_000


class OutOfRange(ValueError):
    pass


class SizeOverflow(ValueError):
    pass


class ConstructionFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class SubsetUniverse:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def size(self) -> int:
        return comb(self.n, self.k)


def subset_rank(u: SubsetUniverse, s: Iterable[int]) -> int:
    """Colex rank of a k-subset of {1..n}: sum of C(a_i - 1, i) over sorted elements."""
    elems = sorted(s)
    if len(elems) != u.k or len(set(elems)) != u.k or elems[0] < 1 or elems[-1] > u.n:
        raise OutOfRange(f"{elems} is not a {u.k}-subset of [1..{u.n}]")
    return sum(comb(a - 1, i) for i, a in enumerate(elems, start=1))


def subset_unrank(u: SubsetUniverse, r: int) -> tuple[int, ...]:
    if not 0 <= r < u.size:
        raise OutOfRange(f"rank {r} outside [0, {u.size})")
    out = []
    top = u.n
    for i in range(u.k, 0, -1):
        # largest a with C(a - 1, i) <= r
        a = top
        while comb(a - 1, i) > r:
            a -= 1
        out.append(a)
        r -= comb(a - 1, i)
        top = a - 1
    return tuple(reversed(out))


def all_subsets(u: SubsetUniverse) -> list[tuple[int, ...]]:
    return [subset_unrank(u, r) for r in range(u.size)]


@dataclass(frozen=True)
class Papartition:
    """``ell`` pairwise disjoint k-subsets, each sorted, ordered by smallest element."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Papartition":
        bs = [tuple(sorted(b)) for b in blocks]
        sizes = {len(b) for b in bs}
        if len(sizes) > 1:
            raise ValueError(f"blocks have different sizes: {bs}")
        flat = [x for b in bs for x in b]
        if len(flat) != len(set(flat)):
            raise ValueError(f"blocks are not pairwise disjoint: {bs}")
        return cls(tuple(sorted(bs)))

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    @property
    def ell(self) -> int:
        return len(self.blocks)


def build_meta_instance(n: int, k: int, cap: int = DEFAULT_INSTANCE_CAP) -> TwoColoredInstance:
    u = SubsetUniverse(n, k)
    if u.size > cap:
        raise SizeOverflow(f"C({n},{k}) = {u.size} exceeds the instance cap {cap}")
    incidence = np.zeros((u.size, n), dtype=np.int32)
    for r, s in enumerate(all_subsets(u)):
        incidence[r, [x - 1 for x in s]] = 1
    inter = incidence @ incidence.T
    off = ~np.eye(u.size, dtype=bool)
    blue = (inter == 0) & off
    red = (2 * inter > k) & off
    return TwoColoredInstance(Graph(blue), Graph(red))


def too_close(P: Papartition, Q: Papartition, k: int) -> bool:
    """Whether distinct A1, B1 in P and distinct A2, B2 in Q meet in more than k/2 points each."""
    big = [[2 * len(set(A) & set(B)) > k for B in Q.blocks] for A in P.blocks]
    for i1 in range(len(P.blocks)):
        for j1 in range(len(P.blocks)):
            if i1 == j1:
                continue
            for i2 in range(len(Q.blocks)):
                if not big[i1][i2]:
                    continue
                for j2 in range(len(Q.blocks)):
                    if j2 != i2 and big[j1][j2]:
                        return True
    return False


def decode_class(u: SubsetUniverse, clazz: Sequence[int]) -> Papartition:
    return Papartition.of(subset_unrank(u, r) for r in clazz)


def canonical_order(u: SubsetUniverse, fam: Iterable[Papartition]) -> list[Papartition]:
    return sorted(fam, key=lambda P: subset_rank(u, P.blocks[0]))


@dataclass
class Construction:
    """A papartition family together with the meta-level certificate it came from."""

    family: list[Papartition]
    instance: TwoColoredInstance
    decomposition: Decomposition
    path: str  # "exchange" or "exhaustive"
    trace: Optional[RepairTrace] = None


def construct_with_certificate(n: int, k: int, ell: int, alpha: Optional[float] = None,
                               cap: int = DEFAULT_INSTANCE_CAP) -> Construction:
    if k * ell > n:
        raise ValueError(f"k*ell = {k * ell} exceeds n = {n}")
    if alpha is None:
        alpha = 1 / (2 * ell * ell)
    p = Params(ell, alpha, k=k, n=n)
    u = SubsetUniverse(n, k)
    inst = build_meta_instance(n, k, cap)

    try:
        d, trace = bag_free_decomposition(inst, p)
        path = "exchange"
    except (RepairFailed, NoValidSwap) as exc:
        log.info("exchange construction failed for n=%d k=%d ell=%d (%s); trying exhaustive search",
                 n, k, ell, exc)
        trace = None
        try:
            found = oracle.exhaustive_bag_free_tiling(inst, ell)
        except oracle.CapExceeded as cap_exc:
            raise ConstructionFailed(f"exchange construction failed ({exc}) and {cap_exc}") from exc
        if found is None:
            raise ConstructionFailed(f"no bag-free tiling exists for n={n} k={k} ell={ell}") from exc
        d, path = found, "exhaustive"

    family = canonical_order(u, [decode_class(u, c) for c in d.classes])
    report = oracle.verify_papartition_family(n, k, ell, family)
    if not report.ok:
        raise ConstructionFailed("constructed family failed verification: " + "; ".join(report.violations))
    return Construction(family, inst, d, path, trace)


def construct_papartitions(n: int, k: int, ell: int, alpha: Optional[float] = None,
                           cap: int = DEFAULT_INSTANCE_CAP) -> list[Papartition]:
    """``floor(C(n,k)/ell)`` papartitions, no k-subset used twice, no two too close.

    ``alpha`` defaults to ``1 / (2 * ell**2)``. Small ``n`` falls back to an
    exhaustive search on the meta-instance when the exchange construction
    gets stuck.
    """
    return construct_with_certificate(n, k, ell, alpha, cap).family
