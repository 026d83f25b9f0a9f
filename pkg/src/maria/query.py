"""Aggregation queries: from one match start and its length to the distinct
alignment columns where matches of that length start.

Both searches run over the run table only, comparing the match start against
run endpoints with LCE queries:

1. :func:`find_run` binary-searches the ``2 r'`` run endpoints (top and
   bottom annotation of every run, in eBWT order) for the run holding the
   match start.
2. :func:`find_interval` extends that run left and right to every run whose
   nearest endpoint shares at least ``length`` characters with the match.

The distinct heads of the resulting run interval are the answer.  A caller
that already knows the lexicographic rank of the match start could skip the
first search; that path is not implemented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .alignment import TERMINATOR, MultipleAlignment, SuffixStart
from .errors import AlignmentError, QueryError
from .index import MariaIndex
from .lce import LceResult, lce, strict_order


@dataclass(frozen=True)
class MatchSpec:
    start: SuffixStart
    length: int


@dataclass(frozen=True)
class AggregationResult:
    run_interval: tuple[int, int]
    columns: tuple[int, ...]
    witnesses: tuple[int, ...] = ()

    @property
    def sorted_columns(self) -> list[int]:
        return sorted(self.columns)


@dataclass
class QueryStats:
    """Instrumentation filled in by the query functions when passed one."""

    lce_calls: int = 0
    distinct_calls: int = 0
    reported: int = 0
    transcript: list[tuple[SuffixStart, LceResult]] = field(default_factory=list)


def _lce(ix: MariaIndex, a: SuffixStart, b: SuffixStart, stats: Optional[QueryStats]) -> LceResult:
    res = lce(ix.alignment, a, b)
    if stats is not None:
        stats.lce_calls += 1
        stats.transcript.append((b, res))
    return res


def _endpoint(ix: MariaIndex, e: int) -> SuffixStart:
    return ix.bottoms[e // 2] if e % 2 else ix.tops[e // 2]


def find_run(ix: MariaIndex, start: SuffixStart, stats: Optional[QueryStats] = None) -> int:
    """Index of the run whose range of eBWT positions contains ``start``."""
    try:
        ix.alignment.validate_start(start)
    except AlignmentError as exc:
        raise QueryError(str(exc)) from None
    lo, hi = 0, 2 * ix.r_prime - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        point = _endpoint(ix, mid)
        if point == start:
            return mid // 2
        res = _lce(ix, start, point, stats)
        if strict_order(ix.alignment, start, point, res) > 0:
            lo = mid + 1
        else:
            hi = mid - 1
    # hi is now the last endpoint sorting before start; it must be a run top
    if hi < 0 or hi % 2 or ix.runs[hi // 2].head != start.col:
        raise QueryError(f"suffix start {start} not found in the index")
    return hi // 2


def find_interval(
    ix: MariaIndex,
    start: SuffixStart,
    length: int,
    r0: int,
    stats: Optional[QueryStats] = None,
) -> tuple[int, int]:
    """Inclusive run interval around ``r0`` of suffixes sharing ``length`` characters
    with ``start``.

    Runs left of ``r0`` qualify through their bottom annotation, runs right of
    it through their top one; both predicates are monotone in the run index.
    """
    if length < 1:
        raise QueryError("match length must be at least 1")
    lo, hi = 0, r0
    while lo < hi:
        mid = (lo + hi) // 2
        if _lce(ix, start, ix.bottoms[mid], stats).length >= length:
            hi = mid
        else:
            lo = mid + 1
    s = lo
    lo, hi = r0, ix.r_prime - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _lce(ix, start, ix.tops[mid], stats).length >= length:
            lo = mid
        else:
            hi = mid - 1
    return s, lo


def validate_match(ma: MultipleAlignment, match: MatchSpec) -> None:
    start = match.start
    if start.col is TERMINATOR:
        raise QueryError("a match must start at an alignment column, not the terminator")
    try:
        upos = ma.col_to_upos(start.row, start.col)
    except AlignmentError as exc:
        raise QueryError(str(exc)) from None
    if match.length < 1:
        raise QueryError("match length must be at least 1")
    remaining = len(ma.ungapped(start.row)) - upos
    if match.length > remaining:
        raise QueryError(
            f"match of length {match.length} at {start} runs past the row terminator "
            f"({remaining} characters remain)"
        )


def aggregate(ix: MariaIndex, match: MatchSpec, stats: Optional[QueryStats] = None) -> AggregationResult:
    """Distinct columns where matches of ``match.length`` characters equal to the
    match at ``match.start`` begin."""
    validate_match(ix.alignment, match)
    r0 = find_run(ix, match.start, stats)
    s, e = find_interval(ix, match.start, match.length, r0, stats)
    counter: dict = {}
    listed = ix.distinct.list_distinct(s, e, counter)
    if stats is not None:
        stats.distinct_calls += counter["calls"]
        stats.reported += len(listed)
    listed = [(head, k) for head, k in listed if head is not TERMINATOR]
    return AggregationResult(
        (s, e), tuple(head for head, _ in listed), tuple(k for _, k in listed)
    )


def check_pattern(ma: MultipleAlignment, pattern: str) -> None:
    if not pattern:
        raise QueryError("pattern is empty")
    bad = sorted(set(pattern) - set(ma.alphabet))
    if bad:
        raise QueryError(f"pattern has characters outside the alphabet: {''.join(bad)!r}")


def locate_one(ma: MultipleAlignment, pattern: str) -> Optional[SuffixStart]:
    """First occurrence of ``pattern`` (by row, then ungapped offset), or None."""
    check_pattern(ma, pattern)
    for row in range(ma.nrows):
        u = ma.ungapped(row).find(pattern)
        if u >= 0:
            return SuffixStart(row, ma.upos_to_col(row, u))
    return None
