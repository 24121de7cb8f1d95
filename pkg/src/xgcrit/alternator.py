"""Admissible intervals, switching, depth and the alternator search.

An alternator for a disjoint pair AB is a list of control pairs <c_i, d_i>
with 1 <= c_1 < ... < c_m <= k-1 and k+1 <= d_m < ... < d_1 <= n such that
every [d_i, c_i] is AB-admissible and switching along those intervals turns
AB into an interlacing pair.  A and B are adjacent in XG(n, k) exactly when
an alternator exists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .cyclic import (
    CyclicInterval,
    ElementSet,
    GroundSet,
    closed_mask,
    from_mask,
    interlacing_mask,
    interval_mask,
    to_mask,
)


@dataclass(frozen=True)
class Alternator:
    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def C(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.pairs)

    @property
    def D(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.pairs)

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(self.C) | frozenset(self.D)

    @property
    def intervals(self) -> tuple[CyclicInterval, ...]:
        return tuple(CyclicInterval(d, c) for c, d in self.pairs)

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.elements))) + "}"


EMPTY = Alternator()


def is_vertex(X: ElementSet, g: GroundSet) -> bool:
    """k elements of [n], no two cyclically adjacent."""
    x = to_mask(X)
    if x.bit_count() != g.k or x >> g.n:
        return False
    rot = ((x << 1) | (x >> (g.n - 1))) & g.full_mask
    return not (x & rot)


def _check_disjoint(a: int, b: int):
    if a & b:
        raise ValueError("A and B must be disjoint")


def _count(mask: int, d: int, c: int, n: int) -> int:
    return (closed_mask(d, c, n) & mask).bit_count()


def is_weakly_admissible(A: ElementSet, B: ElementSet, interval: CyclicInterval, n: int) -> bool:
    """|I ∩ A| == |I ∩ B| == c, where c is the interval's end."""
    a, b = to_mask(A), to_mask(B)
    _check_disjoint(a, b)
    m = interval_mask(interval, n)
    c = interval.end
    return (m & a).bit_count() == c and (m & b).bit_count() == c


def is_admissible(A: ElementSet, B: ElementSet, interval: CyclicInterval, n: int) -> bool:
    if not is_weakly_admissible(A, B, interval, n):
        return False
    u = to_mask(A) | to_mask(B)
    return not (u >> (interval.start - 1)) & 1 and not (u >> (interval.end - 1)) & 1


def _switch(a: int, b: int, imask: int) -> tuple[int, int]:
    inside = (a | b) & imask
    return a ^ inside, b ^ inside


def switch(A: ElementSet, B: ElementSet, interval: CyclicInterval, n: int) -> tuple[frozenset, frozenset]:
    """Exchange the members of A ∪ B lying in ``interval`` between A and B."""
    a, b = to_mask(A), to_mask(B)
    _check_disjoint(a, b)
    a2, b2 = _switch(a, b, interval_mask(interval, n))
    return frozenset(from_mask(a2)), frozenset(from_mask(b2))


def switch_along(A: ElementSet, B: ElementSet, intervals: Iterable[CyclicInterval], n: int) -> tuple[frozenset, frozenset]:
    a, b = to_mask(A), to_mask(B)
    _check_disjoint(a, b)
    for interval in intervals:
        a, b = _switch(a, b, interval_mask(interval, n))
    return frozenset(from_mask(a)), frozenset(from_mask(b))


def depth_mask(x: int, d: int, k: int, n: int) -> int:
    """Depth without the range check on d; returns k when no c qualifies."""
    for c in range(1, k):
        if not (x >> (c - 1)) & 1 and _count(x, d, c, n) == c:
            return c
    return k


def depth(X: ElementSet, d: int, g: GroundSet) -> int:
    """The c in [k-1] with |[d, c] ∩ X| == c and c ∉ X, or the sentinel k.

    For an independent X at most one c qualifies.
    """
    if not g.k <= d <= g.n:
        raise ValueError(f"d={d} outside [{g.k},{g.n}]")
    return depth_mask(to_mask(X), d, g.k, g.n)


def is_alternator(A: ElementSet, B: ElementSet, alt: Alternator, g: GroundSet) -> bool:
    """Check conditions (1)-(4) of the alternator definition for ``alt``."""
    n, k = g.n, g.k
    a, b = to_mask(A), to_mask(B)
    _check_disjoint(a, b)
    u = a | b
    cs, ds = alt.C, alt.D
    if any(not 1 <= c <= k - 1 for c in cs) or any(not k + 1 <= d <= n for d in ds):
        return False
    if any(x >= y for x, y in zip(cs, cs[1:])) or any(x <= y for x, y in zip(ds, ds[1:])):
        return False
    for c, d in alt.pairs:
        if (u >> (c - 1)) & 1 or (u >> (d - 1)) & 1:
            return False
        if _count(a, d, c, n) != c or _count(b, d, c, n) != c:
            return False
    for c, d in alt.pairs:
        a, b = _switch(a, b, closed_mask(d, c, n))
    return interlacing_mask(a, b, n)


def _standard_candidate(a: int, b: int, g: GroundSet) -> Optional[Alternator]:
    n, k = g.n, g.k
    u = a | b
    elems = from_mask(u)
    ds = []
    # gaps between same-side neighbours inside [k, n], taken without wrap
    for x, y in zip(elems, elems[1:]):
        if x < k:
            continue
        if bool(a >> (x - 1) & 1) == bool(a >> (y - 1) & 1):
            ds.append(y - 1)
    ds.sort(reverse=True)
    pairs = tuple((depth_mask(a, d, k, n), d) for d in ds)
    return Alternator(pairs)


def find_standard_alternator_mask(a: int, b: int, g: GroundSet) -> Optional[Alternator]:
    _check_disjoint(a, b)
    if interlacing_mask(a, b, g.n):
        return EMPTY
    alt = _standard_candidate(a, b, g)
    if alt.m == 0 or not is_alternator(a, b, alt, g):
        return None
    return alt


def find_standard_alternator(A: ElementSet, B: ElementSet, g: GroundSet) -> Optional[Alternator]:
    """The standard AB-alternator, or None when A and B are not XG-adjacent.

    D takes, for each pair of (A ∪ B)-neighbours x < y in [k, n] on the same
    side, the element y - 1; each c_i is the depth of d_i in A.  The result
    is re-validated against the full definition before being returned.
    """
    return find_standard_alternator_mask(to_mask(A), to_mask(B), g)


def enumerate_alternators(A: ElementSet, B: ElementSet, g: GroundSet) -> set[Alternator]:
    """Every AB-alternator, by brute force over candidate C and D.  Small n only."""
    n, k = g.n, g.k
    a, b = to_mask(A), to_mask(B)
    _check_disjoint(a, b)
    found = set()
    for m in range(0, k):
        for cs in combinations(range(1, k), m):
            for ds in combinations(range(n, k, -1), m):
                alt = Alternator(tuple(zip(cs, ds)))
                if is_alternator(a, b, alt, g):
                    found.add(alt)
    return found


def xg_edge_characterization_k2(A: ElementSet, B: ElementSet, g: GroundSet) -> bool:
    """Closed-form XG(n, 2) adjacency: interlacing, or 1 < a1 < b1 < b2 < a2."""
    if g.k != 2:
        raise ValueError("only defined for k = 2")
    a, b = to_mask(A), to_mask(B)
    _check_disjoint(a, b)
    if interlacing_mask(a, b, g.n):
        return True
    (a1, a2), (b1, b2) = from_mask(a), from_mask(b)
    if b1 < a1:
        (a1, a2), (b1, b2) = (b1, b2), (a1, a2)
    return 1 < a1 < b1 < b2 < a2


# --- certificate records ---------------------------------------------------

def format_certificate(A: ElementSet, B: ElementSet, alt: Alternator, g: GroundSet) -> str:
    def join(xs):
        return ",".join(str(x) for x in xs)

    pairs = " ".join(f"<{c},{d}>" for c, d in alt.pairs)
    return (
        f"n={g.n} k={g.k}\n"
        f"A={join(from_mask(to_mask(A)))}\n"
        f"B={join(from_mask(to_mask(B)))}\n"
        f"pairs={pairs}\n"
    )


def parse_certificate(text: str) -> tuple[GroundSet, frozenset, frozenset, Alternator]:
    fields = {}
    for line in text.strip().splitlines():
        for part in line.split(" ") if line.startswith("n=") else [line]:
            key, _, value = part.partition("=")
            fields[key.strip()] = value.strip()
    g = GroundSet(int(fields["n"]), int(fields["k"]))

    def elems(s):
        return frozenset(int(x) for x in s.split(",") if x)

    pairs = tuple((int(c), int(d)) for c, d in re.findall(r"<(\d+),(\d+)>", fields["pairs"]))
    return g, elems(fields["A"]), elems(fields["B"]), Alternator(pairs)


def alternator_from_pairs(pairs: Sequence[Sequence[int]]) -> Alternator:
    return Alternator(tuple((int(c), int(d)) for c, d in pairs))
