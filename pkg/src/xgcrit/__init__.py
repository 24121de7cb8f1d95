"""Almost-interlacing subgraphs XG(n, k) of Schrijver graphs: construction,
alternator certificates, Mycielski homomorphisms and colouring checks."""

from .alternator import (
    Alternator,
    enumerate_alternators,
    find_standard_alternator,
    is_alternator,
)
from .cyclic import CyclicInterval, GroundSet
from .graphs import (
    LabeledGraph,
    build_family,
    interlacing_subgraph,
    kneser_graph,
    schrijver_graph,
    xg_graph,
)
from .mycielski import mycielski, mycielski_tower, verify_homomorphism

__version__ = "0.1.0"
