"""Listing the distinct values of an array interval in time linear in the output.

For every position ``k`` we keep ``prev[k]``, the previous position holding
the same value (or -1).  A value in ``[s, e]`` is reported at its leftmost
position there, which is exactly a position with ``prev < s``; a range-minimum
structure over ``prev`` finds those positions one at a time.
"""

from __future__ import annotations

from typing import Hashable, Optional, Sequence


def _ilog2(value: int) -> int:
    return value.bit_length() - 1


class SparseTableRMQ:
    """Constant-time range-minimum queries returning the leftmost argmin.

    Building takes O(n log n) time and space; the data cannot change afterwards.
    """

    def __init__(self, data: Sequence[int]):
        self.data = list(data)
        n = len(self.data)
        # table[d][i] = argmin over data[i : i + 2**d]
        self.table: list[list[int]] = [list(range(n))]
        d = 1
        while (1 << d) <= n:
            below = self.table[d - 1]
            half = 1 << (d - 1)
            level = []
            for i in range(n - (1 << d) + 1):
                a, b = below[i], below[i + half]
                level.append(a if self.data[a] <= self.data[b] else b)
            self.table.append(level)
            d += 1

    def __len__(self) -> int:
        return len(self.data)

    def argmin(self, start: int, stop: int) -> int:
        """Leftmost position of the minimum of ``data[start:stop]`` (non-empty)."""
        if not 0 <= start < stop <= len(self.data):
            raise IndexError(f"empty or out-of-range interval [{start}, {stop})")
        d = _ilog2(stop - start)
        a, b = self.table[d][start], self.table[d][stop - (1 << d)]
        return a if self.data[a] <= self.data[b] else b


class DistinctListing:
    """Distinct-value listing over a fixed sequence of hashable values."""

    def __init__(self, values: Sequence[Hashable]):
        self.values = list(values)
        last: dict = {}
        prev = []
        for k, v in enumerate(self.values):
            prev.append(last.get(v, -1))
            last[v] = k
        self.prev = prev
        self.rmq = SparseTableRMQ(prev)

    def __len__(self) -> int:
        return len(self.values)

    def list_distinct(self, s: int, e: int, stats: Optional[dict] = None) -> list[tuple[Hashable, int]]:
        """Distinct values of ``values[s..e]`` (inclusive) with their leftmost position.

        Output is in recursion order.  If ``stats`` is given, its ``"calls"``
        entry is incremented once per visited subinterval, which is at most
        ``2 * len(result) + 1``.
        """
        if not 0 <= s <= e < len(self.values):
            raise IndexError(f"interval [{s}, {e}] out of range for {len(self.values)} values")
        out = []
        calls = 0
        stack = [(s, e)]
        while stack:
            lo, hi = stack.pop()
            calls += 1
            p = self.rmq.argmin(lo, hi + 1)
            if self.prev[p] >= s:
                continue
            out.append((self.values[p], p))
            if p < hi:
                stack.append((p + 1, hi))
            if lo < p:
                stack.append((lo, p - 1))
        if stats is not None:
            stats["calls"] = stats.get("calls", 0) + calls
        return out
