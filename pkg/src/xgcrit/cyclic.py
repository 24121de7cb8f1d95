"""Cyclic intervals on the cycle C_n with elements 1..n (n + 1 == 1).

Sets of elements are int bitmasks internally: element e lives at bit e - 1.
Everything that crosses the module boundary (arguments, return values) uses
1-based elements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Union

log = logging.getLogger(__name__)

CLOSED = "closed"
OPEN = "open"
OPEN_LEFT = "open-left"
OPEN_RIGHT = "open-right"
_OPENNESS = (CLOSED, OPEN, OPEN_LEFT, OPEN_RIGHT)

ElementSet = Union[int, Iterable[int]]


@dataclass(frozen=True)
class GroundSet:
    """The pair (n, k): cycle length and subset size."""

    n: int
    k: int

    def __post_init__(self):
        if self.k < 1 or self.n < 2 * self.k:
            raise ValueError(f"need k >= 1 and n >= 2k, got n={self.n}, k={self.k}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __str__(self):
        return f"({self.n},{self.k})"


@dataclass(frozen=True)
class CyclicInterval:
    start: int
    end: int
    openness: str = CLOSED

    def __post_init__(self):
        if self.openness not in _OPENNESS:
            raise ValueError(f"unknown openness {self.openness!r}")

    def __str__(self):
        left = "(" if self.openness in (OPEN, OPEN_LEFT) else "["
        right = ")" if self.openness in (OPEN, OPEN_RIGHT) else "]"
        return f"{left}{self.start},{self.end}{right}"


def closed(a: int, b: int) -> CyclicInterval:
    return CyclicInterval(a, b, CLOSED)


def open_(a: int, b: int) -> CyclicInterval:
    return CyclicInterval(a, b, OPEN)


# --- bitmask helpers -------------------------------------------------------

def to_mask(elements: ElementSet) -> int:
    if isinstance(elements, int):
        return elements
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    """Elements of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def size(mask: int) -> int:
    return mask.bit_count()


def _check_element(e: int, n: int):
    if not 1 <= e <= n:
        raise ValueError(f"element {e} outside [1,{n}]")


def closed_mask(a: int, b: int, n: int) -> int:
    """Bitmask of the closed interval [a, b]; [a, a-1] is everything."""
    if a <= b:
        return ((1 << b) - 1) ^ ((1 << (a - 1)) - 1)
    # wraps past n
    return ((1 << n) - 1) ^ ((1 << (a - 1)) - 1) | ((1 << b) - 1)


def interval_mask(interval: CyclicInterval, n: int) -> int:
    a, b = interval.start, interval.end
    _check_element(a, n)
    _check_element(b, n)
    m = closed_mask(a, b, n)
    if interval.openness in (OPEN, OPEN_LEFT):
        m &= ~(1 << (a - 1))
    if interval.openness in (OPEN, OPEN_RIGHT):
        m &= ~(1 << (b - 1))
    return m


def open_mask(a: int, b: int, n: int) -> int:
    return closed_mask(a, b, n) & ~(1 << (a - 1)) & ~(1 << (b - 1))


def clockwise(mask: int, start: int, n: int) -> tuple[int, ...]:
    """Elements of ``mask`` in clockwise order beginning at ``start``."""
    elems = from_mask(mask)
    head = [e for e in elems if e >= start]
    tail = [e for e in elems if e < start]
    return tuple(head + tail)


# --- public operations -----------------------------------------------------

def members(interval: CyclicInterval, n: int) -> tuple[int, ...]:
    """Elements of ``interval`` in clockwise order from its start."""
    return clockwise(interval_mask(interval, n), interval.start, n)


def restrict(interval: CyclicInterval, X: ElementSet, n: int) -> tuple[int, ...]:
    """``interval ∩ X``, ordered clockwise from the interval's start."""
    return clockwise(interval_mask(interval, n) & to_mask(X), interval.start, n)


def consecutive_pairs(X: ElementSet, n: int) -> list[tuple[int, int]]:
    """All X-consecutive ordered pairs <a, b>: nothing of X strictly between.

    Fewer than two elements yields no pairs (logged, not raised).
    """
    elems = from_mask(to_mask(X))
    if len(elems) < 2:
        log.debug("consecutive_pairs: |X| = %d, no pairs", len(elems))
        return []
    return [(elems[i], elems[(i + 1) % len(elems)]) for i in range(len(elems))]


def alternate_on(A: ElementSet, B: ElementSet, interval: CyclicInterval, n: int) -> bool:
    a, b = to_mask(A), to_mask(B)
    if a & b:
        raise ValueError("A and B must be disjoint")
    prev = None
    for e in restrict(interval, a | b, n):
        side = (a >> (e - 1)) & 1
        if side == prev:
            return False
        prev = side
    return True


def is_interlacing(A: ElementSet, B: ElementSet, n: int) -> bool:
    """True iff A and B alternate all the way round C_n (wraparound included)."""
    a, b = to_mask(A), to_mask(B)
    if a & b:
        raise ValueError("A and B must be disjoint")
    for x, y in consecutive_pairs(a | b, n):
        if ((a >> (x - 1)) & 1) == ((a >> (y - 1)) & 1):
            return False
    return True


def interlacing_mask(a: int, b: int, n: int) -> bool:
    """Fast path of :func:`is_interlacing` for disjoint masks."""
    u = a | b
    if not u:
        return True
    first = None
    prev_side = None
    m = u
    while m:
        low = m & -m
        side = bool(a & low)
        if prev_side is not None and side == prev_side:
            return False
        if first is None:
            first = side
        prev_side = side
        m ^= low
    # the wrap pair <last, first>
    return u.bit_count() < 2 or prev_side != first
