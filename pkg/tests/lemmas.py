"""Exhaustive checkers for the structural lemmas, shared by the unit tests
and the acceptance suite.  Each returns a list of counterexamples."""

from itertools import combinations, permutations

from xgcrit.alternator import depth_mask, enumerate_alternators, find_standard_alternator_mask, switch_along
from xgcrit.coloring.critical import classify_vertex, make_context
from xgcrit.cyclic import GroundSet, closed, closed_mask, consecutive_pairs, from_mask, open_mask, to_mask
from xgcrit.graphs import kneser_vertices, schrijver_vertices

from conftest import disjoint_pairs, family_graph


def _count(mask, d, c, n):
    return (closed_mask(d, c, n) & mask).bit_count()


def weak_intervals(a, b, n):
    """All (d, c) with [d, c] weakly AB-admissible."""
    return {
        (d, c)
        for d in range(1, n + 1)
        for c in range(1, n + 1)
        if _count(a, d, c, n) == c and _count(b, d, c, n) == c
    }


def admissible_intervals(a, b, n):
    u = a | b
    return {(d, c) for d, c in weak_intervals(a, b, n) if not (u >> (d - 1)) & 1 and not (u >> (c - 1)) & 1}


def kneser_edges(n, k):
    verts = [to_mask(v) for v in kneser_vertices(GroundSet(n, k))]
    return [(a, b) for a, b in combinations(verts, 2) if not a & b]


def check_obs_sep(n, k):
    bad = []
    for a, b in kneser_edges(n, k):
        for d, c in weak_intervals(a, b, n):
            if not c <= k < d:
                bad.append((from_mask(a), from_mask(b), d, c))
    return bad


def check_intervals(n, k):
    bad = []
    for a, b in kneser_edges(n, k):
        weak = sorted(weak_intervals(a, b, n))
        adm = admissible_intervals(a, b, n)
        u = a | b
        for (d, c), (d2, c2) in combinations(weak, 2):
            m1, m2 = closed_mask(d, c, n), closed_mask(d2, c2, n)
            if m1 & m2 not in (m1, m2):
                bad.append(("nested", from_mask(a), from_mask(b), (d, c), (d2, c2)))
        for (d, c) in weak:
            for (d2, c2) in weak:
                inner, outer = closed_mask(d2, c2, n), closed_mask(d, c, n)
                if inner & ~outer or not c2 < c:
                    continue
                # [d, d') with d' = d is empty; the lemma says this cannot happen
                gap = closed_mask(d, d2, n) & ~(1 << (d2 - 1)) if d != d2 else 0
                if not gap & u:
                    bad.append(("ii-weak", from_mask(a), from_mask(b), (d, c), (d2, c2)))
                if (d, c) in adm and (open_mask(d, d2, n) & u).bit_count() < 2:
                    bad.append(("ii-strict", from_mask(a), from_mask(b), (d, c), (d2, c2)))
    return bad


def _is_sg_vertex(mask, n, k):
    rot = ((mask << 1) | (mask >> (n - 1))) & ((1 << n) - 1)
    return mask.bit_count() == k and not mask & rot


def check_obs_admissible(n, k, max_len=3):
    bad = []
    for A, B in disjoint_pairs(n, k):
        a, b = to_mask(A), to_mask(B)
        weak = weak_intervals(a, b, n)
        adm = sorted(admissible_intervals(a, b, n))
        for length in range(1, min(max_len, len(adm)) + 1):
            for seq in permutations(adm, length):
                A2, B2 = switch_along(A, B, [closed(d, c) for d, c in seq], n)
                a2, b2 = to_mask(A2), to_mask(B2)
                if a2 & b2 or not _is_sg_vertex(a2, n, k) or not _is_sg_vertex(b2, n, k):
                    bad.append(("not an SG edge", A, B, seq))
                elif weak_intervals(a2, b2, n) != weak:
                    bad.append(("weak intervals changed", A, B, seq))
    return bad


def _side(a, x):
    return (a >> (x - 1)) & 1


def check_placement(n, k):
    """Both parts of the placement lemma, for every alternator of every
    non-interlacing XG edge, plus the strengthened bounds on d_1 and d_m."""
    bad = []
    g = GroundSet(n, k)
    for A, B in disjoint_pairs(n, k):
        a, b = to_mask(A), to_mask(B)
        std = find_standard_alternator_mask(a, b, g)
        if std is None or std.m == 0:
            continue
        if std.D[-1] < k + 2 or std.D[0] > n - 2:
            bad.append(("bounds", A, B, std.pairs))
        u = a | b
        for alt in enumerate_alternators(A, B, g):
            dk = to_mask(alt.D) | to_mask((k, n))
            for x, y in consecutive_pairs(dk, n):
                if (x, y) != (n, k) and (closed_mask(x, y, n) & u).bit_count() < 2:
                    bad.append(("i", A, B, alt.pairs, (x, y)))
            cd = to_mask(alt.C) | to_mask(alt.D)
            for x, y in consecutive_pairs(u, n):
                odd = (open_mask(x, y, n) & cd).bit_count() % 2 == 1
                if odd != (_side(a, x) == _side(a, y)):
                    bad.append(("ii", A, B, alt.pairs, (x, y)))
    return bad


def check_depth_unique(n, k):
    bad = []
    for X in schrijver_vertices(GroundSet(n, k)):
        x = to_mask(X)
        for d in range(k, n + 1):
            hits = [c for c in range(1, k) if not _side(x, c) and _count(x, d, c, n) == c]
            if len(hits) > 1:
                bad.append((X, d, hits))
    return bad


def check_disbalance(n, k):
    """No XG edge XY has X heavy and Y light on a common [d, c] or [d, c)."""
    bad = []
    G = family_graph("xg", n, k)
    for i, j in G.edges():
        for X, Y in ((G.labels[i], G.labels[j]), (G.labels[j], G.labels[i])):
            x, y = to_mask(X), to_mask(Y)
            for c in range(1, k):
                for d in range(1, n + 1):
                    if c == d:
                        continue
                    full = closed_mask(d, c, n)
                    half = full & ~(1 << (c - 1))
                    for iv, name in ((full, "i"), (half, "ii")):
                        if (iv & x).bit_count() > c and (iv & y).bit_count() < c:
                            bad.append((name, X, Y, d, c))
    return bad


def contexts(n, k):
    """(graph, ctx) for every edge AB of XG(n, k)."""
    G = family_graph("xg", n, k)
    g = G.ground
    for i, j in G.edges():
        yield G, (i, j), make_context(g, G.labels[i], G.labels[j], G.certificates[(i, j)])


def _w_subsets(ctx):
    return [to_mask(s) for s in combinations(from_mask(ctx.W), ctx.g.k)]


def check_irregular(n, k):
    bad = []
    for G, e, ctx in contexts(n, k):
        for x in _w_subsets(ctx):
            cls = classify_vertex(x, ctx)
            if cls.regular:
                continue
            found = cls.balanced_pairs or any(
                cls.min_heavy_left[i] or cls.min_heavy_right[i] or cls.max_light_left[i] or cls.max_light_right[i]
                for i in range(1, ctx.m + 1)
            )
            if not found:
                bad.append((G.labels[e[0]], G.labels[e[1]], from_mask(x)))
    return bad


def _more_than_half(x, s):
    return 2 * (x & s).bit_count() > s.bit_count()


def check_half(n, k):
    bad = []
    for G, e, ctx in contexts(n, k):
        m = ctx.m
        c, d, U = ctx.c, ctx.d, ctx.U

        def bit(v):
            return 1 << (v - 1)

        for x in _w_subsets(ctx):
            cls = classify_vertex(x, ctx)
            pairs = set(cls.balanced_pairs)
            for i in range(1, m + 1):
                cases = [
                    (cls.min_heavy_left[i], i > 1 and i - 1 in pairs, U[i] | bit(d[i])),
                    (cls.min_heavy_right[i], i > 1 and i - 1 in pairs, U[i] | bit(c[i])),
                    (cls.max_light_left[i], i < m and i + 1 in pairs, U[i + 1] | bit(c[i])),
                    (cls.max_light_right[i], i < m and i + 1 in pairs, U[i + 1] | bit(d[i])),
                ]
                for t, (hyp, balanced, s) in enumerate(cases):
                    if hyp and not balanced and not _more_than_half(x, s):
                        bad.append((G.labels[e[0]], G.labels[e[1]], from_mask(x), i, t))
    return bad


def _w_vertices(G, ctx):
    """Indices of vertices of G that are subsets of W."""
    return [v for v, lab in enumerate(G.labels) if not to_mask(lab) & ~ctx.W]


def check_depth_control(n, k, sentinel_ok=False):
    """delta(X) must be a control element of the standard XY-alternator.

    Counterexamples are tagged "sentinel" when delta(X) = k, and "wrong"
    otherwise.  ``sentinel_ok`` skips the sentinel case, leaving the weaker
    statement that any depth below k is a control element.
    """
    bad = []
    for G, e, ctx in contexts(n, k):
        inside = _w_vertices(G, ctx)
        for u in inside:
            cls = classify_vertex(G.labels[u], ctx)
            if cls.w_pair is None or (sentinel_ok and cls.depth == k):
                continue
            for v in inside:
                if v == u or not G.has_edge(u, v) or {u, v} == set(e):
                    continue
                alt = G.certificates[(min(u, v), max(u, v))]
                if cls.depth not in alt.C:
                    tag = "sentinel" if cls.depth == k else "wrong"
                    bad.append((tag, G.labels[e[0]], G.labels[e[1]], G.labels[u], G.labels[v], cls.w_pair, alt.pairs))
    return bad


def check_depth_indep(n, k):
    bad = []
    for G, e, ctx in contexts(n, k):
        deep = {}
        for u in _w_vertices(G, ctx):
            cls = classify_vertex(G.labels[u], ctx)
            if cls.w_pair is not None:
                deep[u] = cls.depth
        for u, v in combinations(sorted(deep), 2):
            if deep[u] == deep[v] and G.has_edge(u, v) and {u, v} != set(e):
                bad.append((G.labels[e[0]], G.labels[e[1]], G.labels[u], G.labels[v], deep[u]))
    return bad


def check_depth_formula(n, k):
    """depth_mask agrees with a direct scan of the definition (d in [k, n])."""
    bad = []
    for X in schrijver_vertices(GroundSet(n, k)):
        x = to_mask(X)
        for d in range(k, n + 1):
            hits = [c for c in range(1, k) if c not in X and _count(x, d, c, n) == c]
            expected = hits[0] if hits else k
            if depth_mask(x, d, k, n) != expected:
                bad.append((X, d))
    return bad


CHECKS = {
    "separation": check_obs_sep,
    "nested-intervals": check_intervals,
    "switching": check_obs_admissible,
    "placement": check_placement,
    "depth-uniqueness": check_depth_unique,
    "depth-formula": check_depth_formula,
    "disbalance": check_disbalance,
    "irregular": check_irregular,
    "half": check_half,
    "depth-control": check_depth_control,
    "depth-independence": check_depth_indep,
}
