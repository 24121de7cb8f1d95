"""Properness checks and whole-graph edge-criticality certification."""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from ..cyclic import GroundSet
from ..graphs import LabeledGraph, xg_graph
from .critical import R7, Coloring, ColoringError, critical_coloring, make_context
from .exact import DEFAULT_BUDGET, EXACT, chromatic_number

CERT_FORMAT = "xgcrit-critical-certificate"
CERT_VERSION = 1

VERIFIED = "verified"
FAILED = "failed"
UNKNOWN = "unknown"

# exact cross-check covers every edge up to this many vertices, else a sample
EXACT_ALL_MAX_VERTICES = 60
DEFAULT_SAMPLE = 25


@dataclass
class ProperReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_proper(G: LabeledGraph, coloring) -> ProperReport:
    """List every monochromatic edge as (i, j, colour, rule_i, rule_j)."""
    if isinstance(coloring, Coloring):
        colors, rules = coloring.colors, coloring.rules
    else:
        colors, rules = list(coloring), [""] * len(coloring)
    if len(colors) != G.n_vertices or any(c is None for c in colors):
        raise ValueError("colouring must assign every vertex")
    bad = [(i, j, colors[i], rules[i], rules[j]) for i, j in G.edges() if colors[i] == colors[j]]
    return ProperReport(bad)


@dataclass
class EdgeCertificate:
    edge: tuple
    A: tuple
    B: tuple
    pairs: tuple
    colors: list
    rules: list
    violations: list
    palette_size: int
    n_colors: int
    r7_adjacent: list = field(default_factory=list)
    chi: Optional[int] = None
    chi_status: Optional[str] = None
    error: Optional[str] = None

    @property
    def proper(self) -> bool:
        return self.error is None and not self.violations

    def status(self, target: int) -> str:
        if not self.proper or self.n_colors > target or self.r7_adjacent:
            return FAILED
        if self.chi_status is None:
            return VERIFIED
        if self.chi_status != EXACT:
            return UNKNOWN
        return VERIFIED if self.chi == target else FAILED


@dataclass
class CriticalityReport:
    g: GroundSet
    n_vertices: int
    n_edges: int
    certificates: list
    seed: int
    sampled: list

    @property
    def target(self) -> int:
        return self.g.n - 2 * self.g.k + 1

    @property
    def verdict(self) -> str:
        states = {c.status(self.target) for c in self.certificates}
        if FAILED in states:
            return FAILED
        if UNKNOWN in states:
            return UNKNOWN
        return VERIFIED

    @property
    def failures(self) -> list:
        return [c for c in self.certificates if c.status(self.target) == FAILED]


def merge_palette(col: Coloring) -> Coloring:
    """Negative control: recolour col_0 with the least other palette colour."""
    others = sorted(col.palette - {0})
    if not others:
        return col
    target = others[0]
    colors = [target if c == 0 else c for c in col.colors]
    return Coloring(colors, list(col.rules), col.palette)


def certify_edge(
    G: LabeledGraph,
    i: int,
    j: int,
    exact: bool = False,
    budget: int = DEFAULT_BUDGET,
    literal: bool = False,
    corrupt: bool = False,
) -> EdgeCertificate:
    g = G.ground
    A, B = G.labels[i], G.labels[j]
    alt = G.certificates.get((i, j))
    cert = EdgeCertificate((i, j), A, B, alt.pairs if alt else (), [], [], [], 0, 0)
    try:
        ctx = make_context(g, A, B, alt)
        col = critical_coloring(ctx, G.labels, literal=literal)
        if corrupt:
            col = merge_palette(col)
    except ColoringError as exc:
        cert.error = str(exc)
        return cert
    H = G.without_edge(i, j)
    cert.colors, cert.rules = col.colors, col.rules
    cert.violations = verify_proper(H, col).violations
    cert.palette_size = len(col.palette)
    cert.n_colors = col.n_colors
    # only A and B may share col_0 through R7 while being XG-adjacent
    r7 = [v for v, r in enumerate(col.rules) if r == R7]
    cert.r7_adjacent = [
        (u, v) for x, u in enumerate(r7) for v in r7[x + 1:]
        if G.has_edge(u, v) and {u, v} != {i, j}
    ]
    if exact:
        res = chromatic_number(H, budget)
        cert.chi, cert.chi_status = res.chi, res.status
    return cert


_WORKER_GRAPH = None


def _init_worker(n, k):
    global _WORKER_GRAPH
    _WORKER_GRAPH = xg_graph(GroundSet(n, k))


def _work(args):
    return certify_edge(_WORKER_GRAPH, *args)


def choose_exact_edges(edges: list, n_vertices: int, sample, seed: int) -> list:
    """Edges that get the exact-χ cross-check.

    ``sample`` is None (default policy), "all", 0, or a count.
    """
    if sample is None:
        sample = "all" if n_vertices <= EXACT_ALL_MAX_VERTICES else DEFAULT_SAMPLE
    if sample == "all":
        return list(edges)
    sample = int(sample)
    if sample >= len(edges):
        return list(edges)
    return sorted(random.Random(seed).sample(edges, sample))


def verify_edge_critical(
    g: GroundSet,
    sample=None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    seed: int = 0,
    literal: bool = False,
    corrupt: bool = False,
    G: LabeledGraph = None,
) -> CriticalityReport:
    """Colour XG(n,k) - AB with the rule colouring for every edge AB.

    Each colouring is checked for properness and palette size; edges chosen
    by ``sample`` additionally get χ(XG - AB) from the exact solver.
    ``corrupt`` merges two colour classes first (a negative control that
    must fail whenever n > 2k).
    """
    G = G or xg_graph(g)
    edges = list(G.edges())
    exact_edges = set(choose_exact_edges(edges, G.n_vertices, sample, seed))
    tasks = [(i, j, (i, j) in exact_edges, budget, literal, corrupt) for i, j in edges]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(g.n, g.k)) as pool:
            certs = list(pool.map(_work, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        certs = [certify_edge(G, *t) for t in tasks]
    certs.sort(key=lambda c: c.edge)
    return CriticalityReport(g, G.n_vertices, len(edges), certs, seed, sorted(exact_edges))


# --- certificate files -----------------------------------------------------------

def report_to_dict(report: CriticalityReport, G: LabeledGraph, created: str = None) -> dict:
    created = created or datetime.now(timezone.utc).isoformat(timespec="seconds")
    return {
        "created": created,
        "format": CERT_FORMAT,
        "version": CERT_VERSION,
        "n": report.g.n,
        "k": report.g.k,
        "seed": report.seed,
        "target_colors": report.target,
        "verdict": report.verdict,
        "vertices": [list(lab) for lab in G.labels],
        "edges": [
            {
                "edge": [c.edge[0] + 1, c.edge[1] + 1],
                "A": list(c.A),
                "B": list(c.B),
                "pairs": [list(p) for p in c.pairs],
                "status": c.status(report.target),
                "colors_used": c.n_colors,
                "coloring": [[col, rule] for col, rule in zip(c.colors, c.rules)],
                "violations": [[u + 1, v + 1, col, ru, rv] for u, v, col, ru, rv in c.violations],
                "chi": c.chi,
                "chi_status": c.chi_status,
                **({"error": c.error} if c.error else {}),
            }
            for c in report.certificates
        ],
    }


def write_certificate(report: CriticalityReport, G: LabeledGraph, path) -> None:
    doc = report_to_dict(report, G)
    text = json.dumps(doc, indent=1)
    if isinstance(path, (str, os.PathLike)):
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        path.write(text + "\n")
