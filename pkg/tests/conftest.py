from functools import lru_cache
from itertools import combinations

import pytest

from xgcrit.cyclic import GroundSet
from xgcrit.graphs import build_family, schrijver_vertices

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def family_graph(family, n, k):
    return build_family(family, GroundSet(n, k))


@lru_cache(maxsize=None)
def disjoint_pairs(n, k):
    """All unordered disjoint pairs of SG(n,k) vertices."""
    verts = schrijver_vertices(GroundSet(n, k))
    return [(A, B) for A, B in combinations(verts, 2) if not set(A) & set(B)]


@pytest.fixture
def record_criterion():
    def record(number, ok, detail=""):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
