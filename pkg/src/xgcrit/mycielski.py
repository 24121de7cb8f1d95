"""Generalised Mycielski graphs and the map M_k(XG(n-1, k)) -> XG(n, k)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, NamedTuple, Sequence

from .cyclic import GroundSet, closed_mask, from_mask, to_mask
from .graphs import LabeledGraph, complete_graph, xg_graph

APEX = "Z"


class MycielskiVertex(NamedTuple):
    base: Hashable
    level: int


def mycielski(G: LabeledGraph, r: int) -> LabeledGraph:
    """M_r(G): r layered copies of V plus an apex.

    Edges: (u,0)(v,0) and (u,i)(v,i+1) for uv in E, and (u,r-1)z for all u.
    Vertices are ordered level by level, apex last.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    nv = G.n_vertices
    labels = [MycielskiVertex(lab, lvl) for lvl in range(r) for lab in G.labels]
    labels.append(APEX)
    z = r * nv
    adj = [0] * (z + 1)

    def link(x, y):
        adj[x] |= 1 << y
        adj[y] |= 1 << x

    for u, v in G.edges():
        link(u, v)
        for i in range(r - 1):
            link(i * nv + u, (i + 1) * nv + v)
            link(i * nv + v, (i + 1) * nv + u)
    for u in range(nv):
        link((r - 1) * nv + u, z)
    return LabeledGraph(labels, adj, None, f"mycielski-{r}")


def mycielski_tower(t: int, radii: Sequence[int]) -> LabeledGraph:
    """K_2 with M_r applied once per entry of ``radii`` (t - 2 entries)."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if len(radii) != t - 2:
        raise ValueError(f"need {t - 2} radii for t={t}, got {len(radii)}")
    G = complete_graph(2)
    for r in radii:
        G = mycielski(G, r)
    G.family = "mycielski-tower"
    return G


def mycielski_edge_kind(u, v) -> str:
    """'base' for (A,0)(B,0), 'level' for (A,j)(B,j+1), 'apex' for (A,r-1)Z."""
    if u == APEX or v == APEX:
        return "apex"
    if u.level == v.level:
        return "base"
    return "level"


def lift_homomorphism(f: Callable, r: int) -> Callable:
    """Level-wise extension of a map G -> H to M_r(G) -> M_r(H)."""

    def lifted(x):
        if x == APEX:
            return APEX
        return MycielskiVertex(f(x.base), x.level)

    return lifted


# --- the explicit homomorphism ---------------------------------------------------

def lambda_set(n: int, i: int) -> frozenset[int]:
    """Alternate elements packed around n, i of them, independent in C_n."""
    if i < 0 or 2 * i > n:
        raise ValueError(f"i={i} out of range for n={n}")
    if i % 2:
        tail = range(n - i + 1, n + 1, 2)
        head = range(2, i, 2)
    else:
        tail = range(n - i + 1, n, 2)
        head = range(1, i, 2)
    return frozenset(tail) | frozenset(head)


def prefix_set(A, j: int, g: GroundSet) -> frozenset[int]:
    """[d, j] ∩ A for the largest d holding exactly j elements of A.

    That is, the j elements of A met first when walking counterclockwise
    from j (j itself included).  j = 0 gives the empty set.
    """
    a = to_mask(A)
    if not 0 <= j <= g.k or j > a.bit_count():
        raise ValueError(f"j={j} out of range")
    if j == 0:
        return frozenset()
    for d in range(g.n, 0, -1):
        part = closed_mask(d, j, g.n) & a
        if part.bit_count() == j:
            return frozenset(from_mask(part))
    raise AssertionError("unreachable: [j+1, j] holds all of A")


def lemma_image(label, g: GroundSet) -> tuple[int, ...]:
    """Image of one vertex of M_k(XG(n-1, k)) in XG(n, k)."""
    if label == APEX:
        return tuple(sorted(lambda_set(g.n, g.k)))
    A, j = label.base, label.level
    image = (frozenset(A) - prefix_set(A, j, g)) | lambda_set(g.n, j)
    return tuple(sorted(image))


def homomorphism_source(g: GroundSet) -> LabeledGraph:
    """M_k(XG(n-1, k))."""
    if g.n < 2 * g.k + 1:
        raise ValueError("need n >= 2k + 1")
    return mycielski(xg_graph(GroundSet(g.n - 1, g.k)), g.k)


def homomorphism_f(g: GroundSet, source: LabeledGraph = None) -> dict:
    """The map (A, j) -> (A minus A^j) ∪ Λ_{n,j}, Z -> Λ_{n,k}, as a dict."""
    if source is None:
        source = homomorphism_source(g)
    return {lab: lemma_image(lab, g) for lab in source.labels}


@dataclass
class Violation:
    u: Hashable
    v: Hashable
    fu: Hashable
    fv: Hashable
    kind: str = ""


@dataclass
class HomomorphismReport:
    checked: int
    violations: list = field(default_factory=list)
    by_kind: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_homomorphism(source: LabeledGraph, target: LabeledGraph, f, classify=None) -> HomomorphismReport:
    """Check that every source edge lands on a target edge.

    ``f`` is a dict or callable on source labels.  ``classify`` optionally
    tags each source edge (e.g. :func:`mycielski_edge_kind`); per-tag edge
    counts end up in ``by_kind``.
    """
    image = f if callable(f) else f.__getitem__
    idx = {}
    for lab in source.labels:
        t = image(lab)
        if t not in target:
            raise ValueError(f"{lab!r} maps to {t!r}, which is not a target vertex")
        idx[lab] = target.index(t)
    report = HomomorphismReport(0)
    for i, j in source.edges():
        u, v = source.labels[i], source.labels[j]
        kind = classify(u, v) if classify else ""
        report.checked += 1
        report.by_kind[kind] = report.by_kind.get(kind, 0) + 1
        if not target.has_edge(idx[u], idx[v]):
            report.violations.append(Violation(u, v, image(u), image(v), kind))
    return report
