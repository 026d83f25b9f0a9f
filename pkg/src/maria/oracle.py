"""Brute-force references and random test alignments.

Nothing here uses the index.  Occurrences are found by scanning every row,
and :func:`brute_force_ebwt` sorts rotations with the ``xy < yx`` rule for
infinite periodic strings instead of the bounded comparator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key

from .alignment import DNA, MultipleAlignment, SuffixStart
from .query import check_pattern


@dataclass(frozen=True)
class OccurrenceList:
    occurrences: tuple[SuffixStart, ...]
    columns: tuple[int, ...]


def oracle_occurrences(ma: MultipleAlignment, pattern: str) -> OccurrenceList:
    """Every occurrence of ``pattern`` in the ungapped rows, in alignment coordinates."""
    check_pattern(ma, pattern)
    occ = []
    k = len(pattern)
    for row in range(ma.nrows):
        seq = ma.ungapped(row)
        for u in range(len(seq) - k + 1):
            if seq[u : u + k] == pattern:
                occ.append(SuffixStart(row, ma.upos_to_col(row, u)))
    return OccurrenceList(tuple(occ), tuple(sorted({o.col for o in occ})))


def occurrences_by_rotation(ma: MultipleAlignment, pattern: str) -> list[SuffixStart]:
    """Second route to the same answer: every real suffix start whose first
    ``len(pattern)`` cyclic characters spell the pattern."""
    check_pattern(ma, pattern)
    return [
        s
        for s in ma.starts()
        if not s.is_terminator and ma.rotation(s, len(pattern)) == pattern
    ]


def _cyclic(ma: MultipleAlignment, start: SuffixStart) -> str:
    return ma.encode(ma.rotation(start, ma.period(start.row)))


def brute_force_ebwt(ma: MultipleAlignment) -> list[SuffixStart]:
    """All suffix starts in omega-order, ties by (row, offset)."""

    def cmp(a, b):
        x, y = _cyclic(ma, a), _cyclic(ma, b)
        xy, yx = x + y, y + x
        if xy != yx:
            return -1 if xy < yx else 1
        ka, kb = (a.row, ma.offset(a)), (b.row, ma.offset(b))
        return (ka > kb) - (ka < kb)

    return sorted(ma.starts(), key=cmp_to_key(cmp))


def random_sequence(rng: random.Random, length: int, alphabet: str = DNA) -> str:
    return "".join(rng.choice(alphabet) for _ in range(length))


def generate_alignment(
    seed: int,
    nrows: int,
    length: int,
    mutation_rate: float = 0.0,
    gap_rate: float = 0.0,
    alphabet: str = DNA,
    max_retries: int = 100,
) -> MultipleAlignment:
    """A pangenome-like alignment: copies of one random sequence with point
    substitutions and gapped cells.

    Deterministic in ``seed``.  A row that comes out all gaps is redrawn, at most
    ``max_retries`` times.
    """
    if nrows < 1 or length < 1:
        raise ValueError("need at least one row and one column")
    if not (0.0 <= mutation_rate <= 1.0 and 0.0 <= gap_rate <= 1.0):
        raise ValueError("rates must lie in [0, 1]")
    rng = random.Random(seed)
    base = random_sequence(rng, length, alphabet)
    rows = []
    for _ in range(nrows):
        for _attempt in range(max_retries):
            cells = []
            for ch in base:
                if rng.random() < gap_rate:
                    cells.append("-")
                elif len(alphabet) > 1 and rng.random() < mutation_rate:
                    cells.append(rng.choice([c for c in alphabet if c != ch]))
                else:
                    cells.append(ch)
            row = "".join(cells)
            if row.strip("-"):
                break
        else:
            raise ValueError(f"could not draw a non-empty row in {max_retries} attempts")
        rows.append(row)
    return MultipleAlignment(tuple(rows), alphabet=alphabet)
