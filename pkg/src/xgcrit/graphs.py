"""Kneser, Schrijver, XG and interlacing graphs, plus DIMACS/JSON export."""

from __future__ import annotations

import io
import json
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Hashable, Iterator, Optional

from .alternator import Alternator, alternator_from_pairs, find_standard_alternator_mask, is_vertex
from .cyclic import GroundSet, interlacing_mask, to_mask

JSON_FORMAT = "xgcrit-graph"
JSON_VERSION = 1


@dataclass
class LabeledGraph:
    """A simple undirected graph on vertices 0..N-1 with hashable labels.

    ``adj[i]`` is the neighbourhood of i as a bitmask over vertex indices.
    Set-family graphs label vertices with ascending element tuples.
    """

    labels: list
    adj: list[int]
    ground: Optional[GroundSet] = None
    family: str = ""
    certificates: dict = field(default_factory=dict)

    def __post_init__(self):
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._neighbors = None

    def __len__(self):
        return len(self.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def __contains__(self, label) -> bool:
        return label in self._index

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def neighbors(self, i: int) -> list[int]:
        if self._neighbors is None:
            self._neighbors = [_bits(m) for m in self.adj]
        return self._neighbors[i]

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, m in enumerate(self.adj):
            for j in _bits(m >> (i + 1)):
                yield i, i + 1 + j

    def edge_set(self) -> set[frozenset]:
        """Edges as frozensets of labels, for comparisons across graphs."""
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.edges()}

    def without_edge(self, i: int, j: int) -> "LabeledGraph":
        adj = list(self.adj)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        return LabeledGraph(list(self.labels), adj, self.ground, self.family)

    def masks(self) -> list[int]:
        return [to_mask(lab) for lab in self.labels]


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def from_edges(labels: list, edges, **kw) -> LabeledGraph:
    adj = [0] * len(labels)
    for i, j in edges:
        if i == j:
            raise ValueError("loops are not allowed")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return LabeledGraph(list(labels), adj, **kw)


def complete_graph(r: int) -> LabeledGraph:
    return from_edges([(i,) for i in range(1, r + 1)], combinations(range(r), 2), family="complete")


# --- families ------------------------------------------------------------------

def kneser_vertices(g: GroundSet) -> list[tuple[int, ...]]:
    return list(combinations(range(1, g.n + 1), g.k))


def schrijver_vertices(g: GroundSet) -> list[tuple[int, ...]]:
    """k-subsets of [n] independent in C_n, in lexicographic order."""
    return [v for v in kneser_vertices(g) if is_vertex(v, g)]


def _build(g: GroundSet, verts, family, adjacent) -> LabeledGraph:
    masks = [to_mask(v) for v in verts]
    adj = [0] * len(verts)
    certs = {}
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if masks[i] & masks[j]:
                continue
            ok = adjacent(masks[i], masks[j])
            if ok is None or ok is False:
                continue
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            if isinstance(ok, Alternator):
                certs[(i, j)] = ok
    return LabeledGraph(verts, adj, g, family, certs)


def kneser_graph(g: GroundSet) -> LabeledGraph:
    return _build(g, kneser_vertices(g), "kneser", lambda a, b: True)


def schrijver_graph(g: GroundSet) -> LabeledGraph:
    return _build(g, schrijver_vertices(g), "schrijver", lambda a, b: True)


def xg_graph(g: GroundSet) -> LabeledGraph:
    """Spanning subgraph of SG(n, k) on the almost-interlacing pairs.

    The standard alternator of every edge (i, j), i < j, oriented from
    vertex i to vertex j, is kept in ``certificates``.
    """
    return _build(g, schrijver_vertices(g), "xg", lambda a, b: find_standard_alternator_mask(a, b, g))


def interlacing_subgraph(g: GroundSet) -> LabeledGraph:
    return _build(g, schrijver_vertices(g), "interlacing", lambda a, b: interlacing_mask(a, b, g.n))


FAMILIES = {
    "kneser": kneser_graph,
    "schrijver": schrijver_graph,
    "xg": xg_graph,
    "interlacing": interlacing_subgraph,
}


def build_family(family: str, g: GroundSet) -> LabeledGraph:
    try:
        return FAMILIES[family](g)
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None


# --- export ----------------------------------------------------------------------

@contextmanager
def _open_sink(sink, mode="w"):
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, mode) as fh:
            yield fh
    else:
        yield sink


def export_dimacs(G: LabeledGraph, sink) -> None:
    with _open_sink(sink) as fh:
        fh.write(f"p edge {G.n_vertices} {G.n_edges}\n")
        for i, j in G.edges():
            fh.write(f"e {i + 1} {j + 1}\n")


def read_dimacs(source) -> LabeledGraph:
    edges = []
    nv = 0
    with _open_sink(source, "r") as fh:
        for line in fh:
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                nv = int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    return from_edges([(i,) for i in range(1, nv + 1)], edges)


def encode_label(label) -> Any:
    from .mycielski import APEX, MycielskiVertex

    if label == APEX:
        return APEX
    if isinstance(label, MycielskiVertex):
        return {"base": encode_label(label.base), "level": label.level}
    return list(label)


def decode_label(obj) -> Hashable:
    from .mycielski import APEX, MycielskiVertex

    if obj == APEX:
        return APEX
    if isinstance(obj, dict):
        return MycielskiVertex(decode_label(obj["base"]), obj["level"])
    return tuple(obj)


def graph_to_dict(G: LabeledGraph) -> dict:
    doc = {
        "format": JSON_FORMAT,
        "version": JSON_VERSION,
        "family": G.family,
        "n": G.ground.n if G.ground else None,
        "k": G.ground.k if G.ground else None,
        "vertices": [encode_label(lab) for lab in G.labels],
        "edges": [[i + 1, j + 1] for i, j in G.edges()],
    }
    if G.certificates:
        doc["alternators"] = [
            {"edge": [i + 1, j + 1], "pairs": [list(p) for p in alt.pairs]}
            for (i, j), alt in sorted(G.certificates.items())
        ]
    return doc


def graph_from_dict(doc: dict) -> LabeledGraph:
    if doc.get("format") != JSON_FORMAT:
        raise ValueError("not an xgcrit graph document")
    if doc.get("version") != JSON_VERSION:
        raise ValueError(f"unsupported version {doc.get('version')}")
    ground = GroundSet(doc["n"], doc["k"]) if doc.get("n") is not None else None
    labels = [decode_label(v) for v in doc["vertices"]]
    G = from_edges(labels, [(i - 1, j - 1) for i, j in doc["edges"]], ground=ground, family=doc["family"])
    for rec in doc.get("alternators", []):
        i, j = rec["edge"]
        G.certificates[(i - 1, j - 1)] = alternator_from_pairs(rec["pairs"])
    return G


def export_json(G: LabeledGraph, sink) -> None:
    with _open_sink(sink) as fh:
        json.dump(graph_to_dict(G), fh, indent=1)
        fh.write("\n")


def import_json(source) -> LabeledGraph:
    with _open_sink(source, "r") as fh:
        return graph_from_dict(json.load(fh))


def dumps_dimacs(G: LabeledGraph) -> str:
    buf = io.StringIO()
    export_dimacs(G, buf)
    return buf.getvalue()
