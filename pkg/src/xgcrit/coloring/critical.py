"""The (n-2k+1)-colouring of XG(n, k) minus an edge AB, rules R1-R7.

Colours are integers: j in [n] minus (A ∪ B) stands for col_j, and 0 for
col_0.  Control pairs are indexed 1..m as <c_i, d_i>; the context also
stores the sentinels d_0 = c_1, c_0 = d_1, d_{m+1} = c_m, c_{m+1} = d_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..alternator import Alternator, depth_mask, find_standard_alternator_mask, is_alternator
from ..cyclic import GroundSet, closed_mask, from_mask, open_mask, to_mask

R1, R2, R3, R4, R5, R6, R7 = "R1", "R2", "R3", "R4", "R5", "R6", "R7"
RULES = (R1, R2, R3, R4, R5, R6, R7)


class ColoringError(Exception):
    pass


def _bit(mask: int, e: int) -> int:
    return (mask >> (e - 1)) & 1


def _last_cw(mask: int, start: int) -> Optional[int]:
    """Last element of ``mask`` met walking clockwise from ``start``."""
    below = mask & ((1 << (start - 1)) - 1)
    if below:
        return below.bit_length()
    return mask.bit_length() if mask else None


def _nth_cw(mask: int, start: int, t: int, n: int) -> Optional[int]:
    """t-th element (1-based) of ``mask`` walking clockwise from ``start``."""
    hi = mask & ~((1 << (start - 1)) - 1)
    order = from_mask(hi) + from_mask(mask & ((1 << (start - 1)) - 1))
    return order[t - 1] if len(order) >= t else None


@dataclass
class CriticalityContext:
    g: GroundSet
    A: int
    B: int
    alt: Alternator
    W: int = 0
    c: list = field(default_factory=list)
    d: list = field(default_factory=list)
    U: list = field(default_factory=list)
    # interval masks per i in 1..m: [d_i, c_i) and (d_i, c_i]
    left: list = field(default_factory=list)
    right: list = field(default_factory=list)
    W_order: tuple = ()

    @property
    def m(self) -> int:
        return self.alt.m

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(j for j in range(1, self.g.n + 1) if not _bit(self.A | self.B, j)) | {0}


def make_context(g: GroundSet, A, B, alt: Alternator = None) -> CriticalityContext:
    """Context for removing edge AB; ``alt`` defaults to the standard alternator."""
    a, b = to_mask(A), to_mask(B)
    n, k = g.n, g.k
    std = find_standard_alternator_mask(a, b, g)
    if std is None:
        raise ColoringError("AB is not an edge of XG(n,k)")
    if alt is None:
        alt = std
    elif alt != std or not is_alternator(a, b, alt, g):
        raise ColoringError("alternator is not the standard AB-alternator")
    m = alt.m
    cs = [c for c, _ in alt.pairs]
    ds = [d for _, d in alt.pairs]
    W = a | b | to_mask(cs) | to_mask(ds)
    ctx = CriticalityContext(g, a, b, alt, W)
    if m:
        ctx.c = [ds[0]] + cs + [ds[-1]]
        ctx.d = [cs[0]] + ds + [cs[-1]]
        for i in range(1, m + 2):
            u = (open_mask(ctx.d[i], ctx.d[i - 1], n) | open_mask(ctx.c[i - 1], ctx.c[i], n)) & W
            ctx.U.append(u)
        ctx.U.insert(0, 0)  # 1-based
        ctx.left = [0] + [closed_mask(ctx.d[i], ctx.c[i], n) & ~(1 << (ctx.c[i] - 1)) for i in range(1, m + 1)]
        ctx.right = [0] + [closed_mask(ctx.d[i], ctx.c[i], n) & ~(1 << (ctx.d[i] - 1)) for i in range(1, m + 1)]
    ctx.W_order = from_mask(W)
    _check_context(ctx)
    return ctx


def _check_context(ctx: CriticalityContext):
    a, b, n, k = ctx.A, ctx.B, ctx.g.n, ctx.g.k
    C, D = to_mask(ctx.alt.C), to_mask(ctx.alt.D)
    if a & b or (a | b) & (C | D) or C & D:
        raise ColoringError("A, B, C, D are not pairwise disjoint")
    for i in range(1, ctx.m + 1):
        iv = closed_mask(ctx.d[i], ctx.c[i], n)
        if (iv & a).bit_count() != ctx.c[i] or (iv & b).bit_count() != ctx.c[i]:
            raise ColoringError(f"control interval {i} is not admissible")
        expected = 2 * ctx.c[1] if i == 1 else 2 * (ctx.c[i] - ctx.c[i - 1])
        if ctx.U[i] & ~(a | b) or ctx.U[i].bit_count() != expected:
            raise ColoringError(f"U_{i} has the wrong shape")
    if ctx.m and (ctx.U[ctx.m + 1] & ~(a | b) or ctx.U[ctx.m + 1].bit_count() != 2 * (k - ctx.c[ctx.m])):
        raise ColoringError(f"U_{ctx.m + 1} has the wrong shape")


# --- classification ----------------------------------------------------------

@dataclass
class Classification:
    essential: bool
    # status per i in 1..m, index 0 unused: -1 light, 0 balanced, +1 heavy
    left: list
    right: list
    min_heavy_left: list
    min_heavy_right: list
    max_light_left: list
    max_light_right: list
    balanced_pairs: list
    balanced: bool
    regular: bool
    skew: list
    w_pair: Optional[tuple]
    depth: Optional[int]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def w_consecutive_pair(x: int, ctx: CriticalityContext) -> Optional[tuple[int, int]]:
    """The W-consecutive pair <s, s'> inside X with s numerically largest."""
    order = ctx.W_order
    best = None
    for t, s in enumerate(order):
        s2 = order[(t + 1) % len(order)]
        if s != s2 and _bit(x, s) and _bit(x, s2):
            if best is None or s > best[0]:
                best = (s, s2)
    return best


def classify_vertex(X, ctx: CriticalityContext) -> Classification:
    x = to_mask(X)
    m = ctx.m
    left = [0] * (m + 1)
    right = [0] * (m + 1)
    for i in range(1, m + 1):
        left[i] = _sign((ctx.left[i] & x).bit_count() - ctx.c[i])
        right[i] = _sign((ctx.right[i] & x).bit_count() - ctx.c[i])

    def min_heavy(side):
        return [False] + [
            side[i] > 0 and all(left[j] <= 0 and right[j] <= 0 for j in range(1, i))
            for i in range(1, m + 1)
        ]

    def max_light(side):
        return [False] + [
            side[i] < 0 and all(left[j] >= 0 and right[j] >= 0 for j in range(i + 1, m + 1))
            for i in range(1, m + 1)
        ]

    pairs = [i for i in range(1, m + 1) if _bit(x, ctx.c[i]) and _bit(x, ctx.d[i]) and left[i] == 0]
    balanced = all(left[i] == 0 and right[i] == 0 for i in range(1, m + 1))
    skew = [False] * (m + 1)
    for i in range(1, m + 1):
        before = open_mask(ctx.d[i + 1], ctx.d[i], ctx.g.n) & ctx.W
        after = open_mask(ctx.d[i], ctx.d[i - 1], ctx.g.n) & ctx.W
        last = _last_cw(before, ctx.d[i + 1])
        second = _nth_cw(after, ctx.d[i], 2, ctx.g.n)
        skew[i] = last is not None and second is not None and bool(_bit(x, last) and _bit(x, second))
    wp = w_consecutive_pair(x, ctx)
    return Classification(
        essential=not (x & ~ctx.W),
        left=left,
        right=right,
        min_heavy_left=min_heavy(left),
        min_heavy_right=min_heavy(right),
        max_light_left=max_light(left),
        max_light_right=max_light(right),
        balanced_pairs=pairs,
        balanced=balanced,
        regular=balanced and not (x & ~(ctx.A | ctx.B)),
        skew=skew,
        w_pair=wp,
        # depth of s' in X; s' may fall below k, where the same formula applies
        depth=depth_mask(x, wp[1], ctx.g.k, ctx.g.n) if wp else None,
    )


def _r1_color(x: int, ctx: CriticalityContext, literal: bool) -> int:
    outside = from_mask(x & ~ctx.W)
    if literal:
        return outside[0]
    # col_j for j < k is shared with R5 vertices of depth j.  An X holding j
    # plus another outside element e >= k can use e to split the
    # W-consecutive pair that sets such a vertex's depth and still be
    # adjacent to it, so any outside element in [k, n] takes priority.
    high = [e for e in outside if e >= ctx.g.k]
    return high[0] if high else outside[0]


def applicable_rules(X, ctx: CriticalityContext, cls: Classification = None, literal: bool = False) -> list[tuple[str, int]]:
    """Every (rule, colour) whose condition holds for X, in rule order.

    R3 and R4 contribute one entry per matching index i, least i first.
    """
    x = to_mask(X)
    cls = cls or classify_vertex(x, ctx)
    m, k = ctx.m, ctx.g.k
    out = []
    if not cls.essential:
        out.append((R1, _r1_color(x, ctx, literal)))
    if cls.balanced_pairs:
        out.append((R2, ctx.c[cls.balanced_pairs[0]]))
    for i in range(1, m + 1):
        if cls.min_heavy_right[i] or cls.max_light_right[i]:
            out.append((R3, ctx.c[i]))
    for i in range(1, m + 1):
        if cls.min_heavy_left[i] or cls.max_light_left[i]:
            out.append((R4, ctx.d[i]))
    if cls.w_pair is not None:
        j = cls.depth
        out.append((R5, j if j <= k - 1 and not _bit(ctx.A | ctx.B, j) else 0))
    skews = [i for i in range(1, m + 1) if cls.skew[i]]
    if skews:
        out.append((R6, ctx.d[skews[0]]))
    out.append((R7, 0))
    return out


def rule_for(X, ctx: CriticalityContext, literal: bool = False) -> tuple[str, int]:
    """The (rule, colour) assigned to X: first applicable rule, least i within it.

    ``literal=True`` takes the least outside element in R1 and refuses to
    choose when R3 or R4 match several i with different colours.
    """
    rules = applicable_rules(X, ctx, literal=literal)
    rule, color = rules[0]
    if literal:
        same = {c for r, c in rules if r == rule}
        if len(same) > 1:
            raise ColoringError(f"rule {rule} gives conflicting colours {sorted(same)} for {from_mask(to_mask(X))}")
    return rule, color


@dataclass
class Coloring:
    colors: list
    rules: list
    palette: frozenset

    @property
    def n_colors(self) -> int:
        return len(set(self.colors))


def critical_coloring(ctx: CriticalityContext, vertices, literal: bool = False) -> Coloring:
    """Colour every vertex (labels or masks) of XG(n, k) by rules R1-R7."""
    colors, rules = [], []
    for v in vertices:
        rule, color = rule_for(v, ctx, literal)
        colors.append(color)
        rules.append(rule)
    palette = ctx.palette
    stray = set(colors) - palette
    if stray:
        raise ColoringError(f"colours {sorted(stray)} outside the palette")
    return Coloring(colors, rules, palette)
