"""Wreaths of k-intervals along a cyclic order, and a small exact-cover explorer.

Walking around a cyclic order of [n] and cutting consecutive intervals of
length k returns to the starting point after ``lcm(n, k) / k`` intervals,
having gone round ``lcm(n, k) / n`` times. The conjecture that all k-subsets
of [n] split into such wreaths is open; this module only records what the
search finds for specific ``(n, k)``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, lcm
from typing import Optional, Sequence

import numpy as np

from .oracle import Report

DEFAULT_BUDGET = 1_000_000
MAX_SUBSETS = 5_000


class DegenerateInterval(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"search budget exhausted after {steps} steps")


@dataclass(frozen=True)
class Wreath:
    order: tuple[int, ...]
    start: int
    k: int

    @property
    def n(self) -> int:
        return len(self.order)


def wreath_expand(w: Wreath) -> list[tuple[int, ...]]:
    n, k = w.n, w.k
    if k > n:
        raise DegenerateInterval(f"interval length {k} exceeds the cycle length {n}")
    out = []
    for j in range(lcm(n, k) // k):
        pos = w.start + j * k
        out.append(tuple(sorted(w.order[(pos + t) % n] for t in range(k))))
    return out


def verify_wreath_decomposition(n: int, k: int, ws: Sequence[Wreath]) -> Report:
    rep = Report()
    target = set(combinations(range(1, n + 1), k))
    count: dict[tuple[int, ...], int] = {}
    for idx, w in enumerate(ws):
        if sorted(w.order) != list(range(1, n + 1)) or w.k != k:
            rep.fail(f"wreath {idx} is not a cyclic order of [1..{n}] with interval length {k}")
            continue
        exp = wreath_expand(w)
        if len(set(exp)) != len(exp):
            rep.fail(f"wreath {idx} repeats a subset within its own expansion")
        for s in exp:
            count[s] = count.get(s, 0) + 1
    repeated = sorted(s for s, c in count.items() if c > 1)
    if repeated:
        rep.fail(f"multiplicity: subsets covered more than once: {[list(s) for s in repeated]}")
    missing = sorted(target - set(count))
    if missing:
        rep.fail(f"uncovered subsets: {[list(s) for s in missing]}")
    rep.info["wreaths"] = len(ws)
    return rep


def candidate_wreaths(n: int, k: int) -> list[tuple[frozenset, Wreath]]:
    """One representative per distinct expansion set, skipping self-overlapping wreaths.

    Orders are taken with 1 in front, since rotations give nothing new.
    """
    seen: dict[frozenset, Wreath] = {}
    for rest in permutations(range(2, n + 1)):
        order = (1,) + rest
        for start in range(n):
            w = Wreath(order, start, k)
            exp = wreath_expand(w)
            key = frozenset(exp)
            if len(key) != len(exp) or key in seen:
                continue
            seen[key] = w
    return list(seen.items())


@dataclass
class SearchOutcome:
    status: str  # "found", "none" or "budget"
    steps: int
    wreaths: Optional[list[Wreath]]
    seed: Optional[int] = None

    def ledger_line(self, n: int, k: int) -> str:
        seed = "-" if self.seed is None else str(self.seed)
        return f"{n} {k} {self.status} {self.steps} {seed}"


def search_wreaths(n: int, k: int, budget: int = DEFAULT_BUDGET, seed: Optional[int] = None) -> SearchOutcome:
    """Exact cover of all k-subsets by wreath expansions (Knuth's Algorithm X on dict-of-sets)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if comb(n, k) > MAX_SUBSETS:
        raise ValueError(f"C({n},{k}) = {comb(n, k)} exceeds the explorer limit {MAX_SUBSETS}")
    rows = [(tuple(sorted(key)), w) for key, w in candidate_wreaths(n, k)]
    if seed is not None:
        perm = np.random.default_rng(seed).permutation(len(rows))
        rows = [rows[i] for i in perm]
    cover: dict[tuple[int, ...], list[int]] = {s: [] for s in combinations(range(1, n + 1), k)}
    for r, (key, _) in enumerate(rows):
        for s in key:
            cover[s].append(r)
    cols = {s: set(rs) for s, rs in cover.items()}
    steps = 0
    chosen: list[int] = []

    def select(r: int) -> list[set]:
        removed = []
        for s in rows[r][0]:
            for r2 in cols[s]:
                for s2 in rows[r2][0]:
                    if s2 != s:
                        cols[s2].discard(r2)
            removed.append(cols.pop(s))
        return removed

    def deselect(r: int, removed: list[set]) -> None:
        for s, rs in zip(reversed(rows[r][0]), reversed(removed)):
            cols[s] = rs
            for r2 in rs:
                for s2 in rows[r2][0]:
                    if s2 != s:
                        cols[s2].add(r2)

    def solve() -> bool:
        nonlocal steps
        if not cols:
            return True
        col = min(cols, key=lambda s: (len(cols[s]), s))
        for r in sorted(cols[col]):
            steps += 1
            if steps > budget:
                raise BudgetExceeded(steps)
            chosen.append(r)
            removed = select(r)
            if solve():
                return True
            deselect(r, removed)
            chosen.pop()
        return False

    try:
        ok = solve()
    except BudgetExceeded as exc:
        return SearchOutcome("budget", exc.steps, None, seed)
    if not ok:
        return SearchOutcome("none", steps, None, seed)
    return SearchOutcome("found", steps, [rows[r][1] for r in chosen], seed)


def wreath_decomposition_search(n: int, k: int, cap: int = DEFAULT_BUDGET, seed: Optional[int] = None,
                                ledger: Optional[str | os.PathLike] = None) -> Optional[list[Wreath]]:
    """A wreath decomposition of all k-subsets of [n], or None if the search proves there is none.

    Raises BudgetExceeded when ``cap`` search steps run out first. With
    ``ledger`` set, the outcome is appended as ``n k status steps seed``.
    """
    outcome = search_wreaths(n, k, cap, seed)
    if ledger is not None:
        append_ledger(ledger, outcome.ledger_line(n, k))
    if outcome.status == "budget":
        raise BudgetExceeded(outcome.steps)
    return outcome.wreaths


def append_ledger(path: str | os.PathLike, line: str) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


def read_ledger(path: str | os.PathLike) -> list[tuple[int, int, str, int, Optional[int]]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            if not raw.strip():
                continue
            n, k, status, steps, seed = raw.split()
            out.append((int(n), int(k), status, int(steps), None if seed == "-" else int(seed)))
    return out

