"""Longest common extension between two suffix starts, with their relative order.

Suffixes are compared as infinite cyclic strings.  Two rotations with
periods ``p`` and ``q`` that agree on ``p + q`` characters agree forever, so
the comparison stops there and reports ``EQUAL`` with that length.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .alignment import MultipleAlignment, SuffixStart


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {-1: "≺", 0: "=", 1: "≻"}[self.value]


class LceResult(NamedTuple):
    length: int
    order: Order

    def __str__(self) -> str:
        return f"({self.length}, {self.order.symbol})"


def _slices(ma: MultipleAlignment, a: SuffixStart, b: SuffixStart):
    buf_a, oa, pa = ma.rotation_slot(a)
    buf_b, ob, pb = ma.rotation_slot(b)
    cap = pa + pb
    return buf_a[oa : oa + cap], buf_b[ob : ob + cap], cap


def lce(ma: MultipleAlignment, a: SuffixStart, b: SuffixStart) -> LceResult:
    """Length of the longest common prefix of the rotations at ``a`` and ``b`` and
    whether ``a`` sorts before, after, or together with ``b``."""
    buf_a, oa, pa = ma.rotation_slot(a)
    buf_b, ob, pb = ma.rotation_slot(b)
    cap = pa + pb
    sa, sb = buf_a[oa : oa + cap], buf_b[ob : ob + cap]
    if sa == sb:
        return LceResult(cap, Order.EQUAL)
    # smallest k with sa[:k] != sb[:k]; the mismatch sits at k - 1
    lo, hi = 0, cap
    while lo < hi:
        mid = (lo + hi) // 2
        if sa[: mid + 1] == sb[: mid + 1]:
            lo = mid + 1
        else:
            hi = mid
    return LceResult(lo, Order.LESS if sa[lo] < sb[lo] else Order.GREATER)


def tie_break(ma: MultipleAlignment, a: SuffixStart, b: SuffixStart) -> int:
    """Order rotations that are equal forever: by row, then by ungapped offset."""
    ka, kb = (a.row, ma.offset(a)), (b.row, ma.offset(b))
    return (ka > kb) - (ka < kb)


def compare_starts(ma: MultipleAlignment, a: SuffixStart, b: SuffixStart) -> int:
    """Strict total order on suffix starts used to sort the eBWT: -1, 0 (same start) or 1."""
    sa, sb, _ = _slices(ma, a, b)
    if sa < sb:
        return -1
    if sa > sb:
        return 1
    return tie_break(ma, a, b)


def strict_order(ma: MultipleAlignment, a: SuffixStart, b: SuffixStart, res: LceResult) -> int:
    """Resolve an :class:`LceResult` to -1, 0 or 1 using the build tie-break."""
    if res.order is Order.EQUAL:
        return tie_break(ma, a, b)
    return int(res.order)
