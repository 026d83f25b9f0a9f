"""Annotated extended BWT of the rows of a multiple alignment.

Every suffix start of every row is sorted by the omega-order of its cyclic
rotation.  Each entry keeps the eBWT character (the one cyclically preceding
the suffix) and the ``(row, col)`` annotation of where the suffix starts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import NamedTuple, Optional

from .alignment import MultipleAlignment, SuffixStart, format_col
from .lce import compare_starts


class EbwtEntry(NamedTuple):
    bwt_char: str
    start: SuffixStart


@dataclass(frozen=True)
class AnnotatedEbwt:
    alignment: MultipleAlignment
    entries: tuple[EbwtEntry, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> EbwtEntry:
        return self.entries[i]

    def suffix(self, i: int) -> str:
        """The rotation at entry ``i`` without its trailing eBWT character."""
        start = self.entries[i].start
        return self.alignment.rotation(start, self.alignment.period(start.row) - 1)

    def to_tsv(self) -> str:
        lines = ["row\tcol\tbwt\tsuffix"]
        for i, (ch, start) in enumerate(self.entries):
            lines.append(f"{start.row}\t{format_col(start.col)}\t{ch}\t{self.suffix(i)}")
        return "\n".join(lines) + "\n"


def build_annotated_ebwt(ma: MultipleAlignment) -> AnnotatedEbwt:
    ordered = sorted(ma.starts(), key=cmp_to_key(lambda a, b: compare_starts(ma, a, b)))
    entries = tuple(
        EbwtEntry(ma.rotation_char(s, ma.period(s.row) - 1), s) for s in ordered
    )
    return AnnotatedEbwt(ma, entries)


def col_annotations(e: AnnotatedEbwt) -> list[Optional[int]]:
    """The ``col`` string: column annotation of each entry in eBWT order."""
    return [entry.start.col for entry in e.entries]
