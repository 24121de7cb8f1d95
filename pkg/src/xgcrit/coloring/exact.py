"""Exact chromatic number by DSATUR branch and bound.

Lower bound from a maximum clique, upper bound from greedy DSATUR, then a
sequence of exhaustive q-colourability searches for q = ub-1, ub-2, ...
until one fails.  The search is deterministic: ties in the DSATUR choice go
to the higher static degree and then to the lower vertex index, and a new
colour is only ever the next unused one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graphs import LabeledGraph

DEFAULT_BUDGET = 50_000_000

EXACT = "exact"
UNKNOWN = "unknown"


class BudgetExceeded(Exception):
    pass


@dataclass
class ChromaticResult:
    status: str
    chi: Optional[int]
    lower: int
    upper: int
    coloring: list[int]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.status == EXACT


def _bits(m):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def max_clique(adj: list[int]) -> list[int]:
    """A maximum clique (vertex indices), by simple bitset branch and bound."""
    best: list[int] = []

    def expand(cand: int, chosen: list[int]):
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        while cand:
            if len(chosen) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            expand(cand & adj[v], chosen)
            chosen.pop()

    expand((1 << len(adj)) - 1, [])
    return best


def dsatur_greedy(adj: list[int]) -> list[int]:
    n = len(adj)
    color = [-1] * n
    deg = [m.bit_count() for m in adj]
    classes: list[int] = []
    for _ in range(n):
        best, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = sum(1 for cm in classes if adj[v] & cm)
            key = (sat, deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        for c, cm in enumerate(classes):
            if not adj[best] & cm:
                break
        else:
            c = len(classes)
            classes.append(0)
        color[best] = c
        classes[c] |= 1 << best
    return color


class _Search:
    """Exhaustive DSATUR search for a q-colouring."""

    def __init__(self, adj: list[int], q: int, budget: int):
        self.adj = adj
        self.n = len(adj)
        self.q = q
        self.budget = budget
        self.nodes = 0
        self.deg = [m.bit_count() for m in adj]
        self.color = [-1] * self.n
        self.cnt = [[0] * q for _ in range(self.n)]
        self.sat = [0] * self.n
        self.nbrs = [list(_bits(m)) for m in adj]

    def assign(self, v: int, c: int):
        self.color[v] = c
        cnt, sat, color = self.cnt, self.sat, self.color
        for u in self.nbrs[v]:
            row = cnt[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(self, v: int, c: int):
        self.color[v] = -1
        cnt, sat = self.cnt, self.sat
        for u in self.nbrs[v]:
            row = cnt[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    def pick(self) -> int:
        best, bs, bd = -1, -1, -1
        color, sat, deg = self.color, self.sat, self.deg
        for v in range(self.n):
            if color[v] < 0:
                s = sat[v]
                if s > bs or (s == bs and deg[v] > bd):
                    best, bs, bd = v, s, deg[v]
        return best

    def run(self, used: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded
        v = self.pick()
        if self.sat[v] >= self.q:
            return False
        row = self.cnt[v]
        for c in range(min(used + 1, self.q)):
            if row[c]:
                continue
            self.assign(v, c)
            if self.run(max(used, c + 1), remaining - 1):
                return True
            self.unassign(v, c)
        return False


def find_coloring(adj: list[int], q: int, budget: int = DEFAULT_BUDGET, clique=None):
    """A proper colouring with at most q colours, or None if none exists.

    Raises BudgetExceeded when the node budget runs out first.
    Returns (coloring or None, nodes).
    """
    n = len(adj)
    if n == 0:
        return [], 0
    if q <= 0:
        return None, 0
    clique = clique if clique is not None else max_clique(adj)
    if len(clique) > q:
        return None, 0
    search = _Search(adj, q, budget)
    for c, v in enumerate(clique):
        search.assign(v, c)
    try:
        ok = search.run(len(clique), n - len(clique))
    except RecursionError:  # pragma: no cover - graphs here stay far below the limit
        raise BudgetExceeded
    return (list(search.color) if ok else None), search.nodes


def is_proper(adj: list[int], coloring: list[int]) -> bool:
    return all(coloring[u] != coloring[v] for u in range(len(adj)) for v in _bits(adj[u]))


def sat_coloring(adj: list[int], q: int, budget: int = DEFAULT_BUDGET, clique=None):
    """Decide q-colourability with a CDCL solver; same contract as find_coloring.

    ``budget`` caps the solver's conflicts.
    """
    from pysat.solvers import Solver

    n = len(adj)
    if n == 0:
        return [], 0
    if q <= 0:
        return None, 0
    clique = clique if clique is not None else max_clique(adj)
    if len(clique) > q:
        return None, 0

    def var(v, c):
        return v * q + c + 1

    with Solver(name="cadical153") as solver:
        for v in range(n):
            solver.add_clause([var(v, c) for c in range(q)])
            for u in _bits(adj[v] >> (v + 1)):
                u += v + 1
                for c in range(q):
                    solver.add_clause([-var(v, c), -var(u, c)])
        for c, v in enumerate(clique):
            solver.add_clause([var(v, c)])
        solver.conf_budget(budget)
        ok = solver.solve_limited()
        conflicts = solver.accum_stats().get("conflicts", 0)
        if ok is None:
            raise BudgetExceeded
        if not ok:
            return None, conflicts
        model = set(x for x in solver.get_model() if x > 0)
    coloring = [next(c for c in range(q) if var(v, c) in model) for v in range(n)]
    return _canonical(coloring), conflicts


def _canonical(coloring: list[int]) -> list[int]:
    """Renumber colours by first appearance."""
    seen: dict = {}
    return [seen.setdefault(c, len(seen)) for c in coloring]


ENGINES = ("auto", "dsatur", "sat")
AUTO_DSATUR_NODES = 200_000


def _decide(adj, q, budget, clique, engine):
    if engine == "dsatur":
        return find_coloring(adj, q, budget, clique)
    if engine == "sat":
        return sat_coloring(adj, q, budget, clique)
    try:
        return find_coloring(adj, q, min(budget, AUTO_DSATUR_NODES), clique)
    except BudgetExceeded:
        return sat_coloring(adj, q, budget, clique)


def chromatic_number(G: LabeledGraph, budget: int = DEFAULT_BUDGET, engine: str = "auto") -> ChromaticResult:
    """Exact chromatic number with a witness colouring.

    ``engine`` picks the q-colourability search: "dsatur" (branch and bound,
    ``budget`` counts search nodes), "sat" (CDCL, ``budget`` counts
    conflicts), or "auto" (DSATUR first, CDCL once DSATUR has spent a fixed
    node allowance).  If the budget is exhausted the status is ``unknown``
    and ``chi`` is None; ``lower``/``upper`` still hold valid bounds.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    adj = G.adj
    n = len(adj)
    if n == 0:
        raise ValueError("empty graph")
    clique = max_clique(adj)
    lower = max(1, len(clique))
    best = dsatur_greedy(adj)
    upper = max(best) + 1
    nodes = 0
    while upper > lower:
        try:
            witness, used = _decide(adj, upper - 1, budget, clique, engine)
        except BudgetExceeded:
            return ChromaticResult(UNKNOWN, None, lower, upper, best, nodes)
        nodes += used
        if witness is None:
            lower = upper
            break
        best = witness
        upper = max(witness) + 1
    return ChromaticResult(EXACT, upper, upper, upper, best, nodes)
