"""Exact chromatic numbers and the rule colouring of XG(n, k) minus an edge."""

from .critical import (
    RULES,
    Classification,
    Coloring,
    ColoringError,
    CriticalityContext,
    applicable_rules,
    classify_vertex,
    critical_coloring,
    make_context,
    rule_for,
    w_consecutive_pair,
)
from .exact import (
    DEFAULT_BUDGET,
    EXACT,
    UNKNOWN,
    BudgetExceeded,
    ChromaticResult,
    chromatic_number,
    dsatur_greedy,
    find_coloring,
    is_proper,
    max_clique,
    sat_coloring,
)
from .verify import (
    CriticalityReport,
    EdgeCertificate,
    ProperReport,
    certify_edge,
    report_to_dict,
    verify_edge_critical,
    verify_proper,
    write_certificate,
)
