"""Multiple alignments and the coordinates used to address their suffixes.

Rows are read as cyclic strings: the ungapped row followed by a terminator
character that sorts before every alphabet symbol.  A suffix start is a
``(row, col)`` pair where ``col`` is either a non-gap alignment column or
:data:`TERMINATOR`, the position of the row's terminator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import AlignmentError

DNA = "ACGT"

#: Column value of a suffix that starts at the row terminator.
TERMINATOR = None


class SuffixStart(NamedTuple):
    row: int
    col: Optional[int]

    @property
    def is_terminator(self) -> bool:
        return self.col is TERMINATOR

    def __str__(self) -> str:
        return f"({self.row}, {format_col(self.col)})"


def format_col(col: Optional[int]) -> str:
    """Render a column annotation, using ``?`` for the terminator."""
    return "?" if col is TERMINATOR else str(col)


@dataclass(frozen=True)
class MultipleAlignment:
    """An immutable, validated multiple alignment.

    ``rows`` are the gapped strings, all of the same width.  ``names`` holds
    FASTA headers when the alignment came from a FASTA file; rows are always
    addressed by their 0-based position.
    """

    rows: tuple[str, ...]
    alphabet: str = DNA
    gap_char: str = "-"
    terminator: str = "$"
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "names", tuple(self.names))
        self._validate()

    def _validate(self):
        if len(self.gap_char) != 1 or len(self.terminator) != 1:
            raise AlignmentError("gap and terminator must be single characters")
        if self.gap_char == self.terminator:
            raise AlignmentError("gap and terminator characters must differ")
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise AlignmentError(f"alphabet {self.alphabet!r} is empty or repeats a symbol")
        if self.gap_char in self.alphabet or self.terminator in self.alphabet:
            raise AlignmentError("alphabet must not contain the gap or terminator character")
        if not self.rows:
            raise AlignmentError("alignment has no rows")
        width = len(self.rows[0])
        allowed = set(self.alphabet)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise AlignmentError(
                    f"row {i} has length {len(row)}, expected alignment width {width}"
                )
            for j, ch in enumerate(row):
                if ch != self.gap_char and ch not in allowed:
                    raise AlignmentError(
                        f"character outside alphabet: {ch!r} in row {i}, column {j}"
                    )
            if row.count(self.gap_char) == len(row):
                raise AlignmentError(f"row {i} is empty or contains only gaps")

    @classmethod
    def from_ungapped(
        cls,
        sequences: Sequence[str],
        columns: Sequence[Sequence[int]],
        width: int,
        alphabet: str = DNA,
        gap_char: str = "-",
    ) -> "MultipleAlignment":
        """Rebuild gapped rows from ungapped strings and their column maps."""
        rows = []
        for i, (seq, cols) in enumerate(zip(sequences, columns)):
            if len(seq) != len(cols):
                raise AlignmentError(f"row {i}: {len(cols)} columns for {len(seq)} characters")
            if any(b <= a for a, b in zip(cols, cols[1:])):
                raise AlignmentError(f"row {i}: column map is not strictly increasing")
            if cols and (cols[0] < 0 or cols[-1] >= width):
                raise AlignmentError(f"row {i}: column map leaves the alignment width {width}")
            cells = [gap_char] * width
            for ch, c in zip(seq, cols):
                cells[c] = ch
            rows.append("".join(cells))
        return cls(tuple(rows), alphabet=alphabet, gap_char=gap_char)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @cached_property
    def _ungapped(self) -> tuple[str, ...]:
        return tuple(row.replace(self.gap_char, "") for row in self.rows)

    @cached_property
    def _columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(j for j, ch in enumerate(row) if ch != self.gap_char) for row in self.rows
        )

    @cached_property
    def _upos(self) -> tuple[tuple[int, ...], ...]:
        # column -> ungapped position, -1 on gap cells
        out = []
        for cols in self._columns:
            inv = [-1] * self.width
            for u, c in enumerate(cols):
                inv[c] = u
            out.append(tuple(inv))
        return tuple(out)

    @property
    def n_entries(self) -> int:
        """Number of suffix starts over all rows (one per character plus terminators)."""
        return sum(len(s) + 1 for s in self._ungapped)

    def ungapped(self, row: int) -> str:
        return self._ungapped[row]

    def column_map(self, row: int) -> tuple[int, ...]:
        """Alignment column of each ungapped position of ``row``."""
        return self._columns[row]

    def period(self, row: int) -> int:
        return len(self._ungapped[row]) + 1

    def upos_to_col(self, row: int, upos: int) -> int:
        self._check_row(row)
        cols = self._columns[row]
        if not 0 <= upos < len(cols):
            raise AlignmentError(f"ungapped position {upos} out of range for row {row}")
        return cols[upos]

    def col_to_upos(self, row: int, col: int) -> int:
        self._check_row(row)
        if not 0 <= col < self.width:
            raise AlignmentError(f"column {col} out of range [0, {self.width})")
        u = self._upos[row][col]
        if u < 0:
            raise AlignmentError(f"gap cell at row {row}, column {col}")
        return u

    def offset(self, start: SuffixStart) -> int:
        """Position of ``start`` inside the row's cyclic string ``ungapped + terminator``."""
        if start.col is TERMINATOR:
            self._check_row(start.row)
            return len(self._ungapped[start.row])
        return self.col_to_upos(start.row, start.col)

    def start_at(self, row: int, offset: int) -> SuffixStart:
        """Inverse of :meth:`offset`."""
        self._check_row(row)
        n = len(self._ungapped[row])
        if offset == n:
            return SuffixStart(row, TERMINATOR)
        return SuffixStart(row, self.upos_to_col(row, offset))

    def starts(self) -> Iterator[SuffixStart]:
        """Every suffix start, row by row, in ungapped order then the terminator."""
        for row, cols in enumerate(self._columns):
            for c in cols:
                yield SuffixStart(row, c)
            yield SuffixStart(row, TERMINATOR)

    def rotation_char(self, start: SuffixStart, t: int) -> str:
        """The ``t``-th character of the infinite cyclic string beginning at ``start``."""
        cyc = self._ungapped[start.row] + self.terminator
        return cyc[(self.offset(start) + t) % len(cyc)]

    def rotation(self, start: SuffixStart, length: int) -> str:
        return "".join(self.rotation_char(start, t) for t in range(length))

    def validate_start(self, start: SuffixStart) -> None:
        self.offset(start)

    def _check_row(self, row: int):
        if not 0 <= row < len(self.rows):
            raise AlignmentError(f"row {row} out of range [0, {len(self.rows)})")

    @cached_property
    def _translation(self) -> dict[int, str]:
        table = {ord(self.terminator): "\x00"}
        for rank, ch in enumerate(self.alphabet, start=1):
            table[ord(ch)] = chr(rank)
        return table

    def encode(self, text: str) -> str:
        """Map characters to code points that sort in alphabet order (terminator lowest)."""
        return text.translate(self._translation)

    @cached_property
    def rotation_buffers(self) -> tuple[str, ...]:
        """Encoded cyclic rows, repeated so any row can slice ``offset + p + q`` characters
        for any pair of periods ``p`` and ``q`` in the alignment."""
        longest = max(len(s) for s in self._ungapped) + 1
        out = []
        for s in self._ungapped:
            enc = self.encode(s + self.terminator)
            p = len(enc)
            reps = math.ceil((2 * p + longest) / p)
            out.append(enc * reps)
        return tuple(out)

    @cached_property
    def _slots(self) -> dict[SuffixStart, tuple[str, int, int]]:
        slots = {}
        for row, buf in enumerate(self.rotation_buffers):
            period = self.period(row)
            for u, c in enumerate(self._columns[row]):
                slots[SuffixStart(row, c)] = (buf, u, period)
            slots[SuffixStart(row, TERMINATOR)] = (buf, period - 1, period)
        return slots

    def rotation_slot(self, start: SuffixStart) -> tuple[str, int, int]:
        """``(encoded buffer, offset, period)`` of a suffix start, for fast comparisons."""
        try:
            return self._slots[start]
        except KeyError:
            self.validate_start(start)
            raise AlignmentError(f"invalid suffix start {start}") from None


def _parse_fasta(text: str) -> tuple[list[str], list[str]]:
    names, rows = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            names.append(line[1:].strip())
            rows.append([])
        elif not rows:
            raise AlignmentError(f"malformed FASTA: line {lineno} precedes the first '>' header")
        else:
            rows[-1].append(line)
    if not rows:
        raise AlignmentError("malformed FASTA: no records")
    for name, parts in zip(names, rows):
        if not parts:
            raise AlignmentError(f"malformed FASTA: record {name!r} has no sequence")
    return names, ["".join(parts) for parts in rows]


def parse_msa(
    text: str,
    format: str = "plain",
    alphabet: str = DNA,
    gap_char: str = "-",
    terminator: str = "$",
) -> MultipleAlignment:
    """Parse a multiple alignment from aligned FASTA or plain one-row-per-line text.

    Blank lines are ignored.  Raises :class:`AlignmentError` on unequal row
    lengths, characters outside the alphabet, all-gap rows or malformed FASTA.
    """
    if not text.strip():
        raise AlignmentError("empty alignment text")
    if format == "fasta":
        names, rows = _parse_fasta(text)
    elif format == "plain":
        names = []
        rows = [line.strip() for line in text.splitlines() if line.strip()]
    else:
        raise ValueError(f"unknown alignment format {format!r}")
    return MultipleAlignment(
        tuple(rows), alphabet=alphabet, gap_char=gap_char, terminator=terminator, names=tuple(names)
    )


def detect_format(text: str) -> str:
    return "fasta" if text.lstrip().startswith(">") else "plain"
