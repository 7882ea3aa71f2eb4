"""Compound pairs: two classes of a decomposition whose union spans ``K_{2 ell}``."""
from __future__ import annotations

from fractions import Fraction

from .graph import Graph, Params, as_fraction
from .tiling import Clazz, Decomposition


class ClassNotInDecomposition(ValueError):
    pass


def compound_partners(g: Graph, d: Decomposition, C: Clazz) -> list[Clazz]:
    """All classes D != C completely joined to C in ``g``, sorted by smallest vertex.

    Both classes are cliques already, so a complete join means ``C | D`` is a
    clique on ``2 * ell`` vertices.
    """
    C = tuple(sorted(C))
    if C not in d.classes:
        raise ClassNotInDecomposition(f"{list(C)} is not a class of the decomposition")
    rows = g.adj[list(C)]
    found = [D for D in d.classes if D != C and rows[:, list(D)].all()]
    return sorted(found, key=lambda D: D[0])


def lemma2_lower_bound(m: int, p: Params) -> float:
    """``m * ell * alpha - ell * (ell - 1)``; may be zero or negative."""
    return float(m * p.ell * as_fraction(p.alpha) - p.ell * (p.ell - 1))


def compound_bound_exact(m: int, p: Params) -> Fraction:
    return m * p.ell * as_fraction(p.alpha) - p.ell * (p.ell - 1)
