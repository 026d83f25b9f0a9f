"""The MARIA run table and its on-disk text format.

The index keeps one :class:`Run` per maximal run of equal column annotations
in eBWT order: the run head plus the rows of its first and last annotation.
The eBWT itself is dropped after the build.  Rows of the alignment are kept
(ungapped, with their column maps) as the context for LCE queries.

File format, LF line endings::

    MARIA 1
    <nrows> <m> [<alphabet>]
    <ungapped row> <comma-separated columns>     # one line per row
    RUNS <r'>
    <head|?> <t_row> <b_row>                     # one line per run

The alphabet field is written only when it differs from ``ACGT``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import NamedTuple, Optional

from .alignment import DNA, TERMINATOR, MultipleAlignment, SuffixStart, format_col
from .distinct import DistinctListing
from .ebwt import AnnotatedEbwt, build_annotated_ebwt
from .errors import AlignmentError, IndexFormatError

MAGIC = "MARIA"
VERSION = 1


class Run(NamedTuple):
    """One run of the ``col`` string: its head and the rows of its first and last entry."""

    head: Optional[int]
    t_row: int
    b_row: int

    @property
    def top(self) -> SuffixStart:
        return SuffixStart(self.t_row, self.head)

    @property
    def bottom(self) -> SuffixStart:
        return SuffixStart(self.b_row, self.head)

    def __str__(self) -> str:
        return f"{format_col(self.head)} {self.t_row} {self.b_row}"


def compress_runs(e: AnnotatedEbwt) -> list[Run]:
    runs = []
    for head, group in groupby(e.entries, key=lambda entry: entry.start.col):
        group = list(group)
        runs.append(Run(head, group[0].start.row, group[-1].start.row))
    return runs


def run_lengths(e: AnnotatedEbwt) -> list[int]:
    """Run lengths of ``col``; only used for build-time checks, never stored."""
    return [len(list(g)) for _, g in groupby(e.entries, key=lambda entry: entry.start.col)]


@dataclass(frozen=True)
class MariaIndex:
    runs: tuple[Run, ...]
    alignment: MultipleAlignment

    def __post_init__(self):
        object.__setattr__(self, "runs", tuple(self.runs))
        self._check()

    def _check(self):
        if not self.runs:
            raise IndexFormatError("index has no runs")
        ma = self.alignment
        for k, run in enumerate(self.runs):
            if k and run.head == self.runs[k - 1].head:
                raise IndexFormatError(f"runs {k - 1} and {k} share head {format_col(run.head)}")
            try:
                ma.validate_start(run.top)
                ma.validate_start(run.bottom)
            except AlignmentError as exc:
                raise IndexFormatError(f"run {k} has an invalid endpoint: {exc}") from None

    @property
    def r_prime(self) -> int:
        return len(self.runs)

    @property
    def n_entries(self) -> int:
        return self.alignment.n_entries

    @property
    def heads(self) -> list[Optional[int]]:
        return [run.head for run in self.runs]

    @cached_property
    def tops(self) -> tuple[SuffixStart, ...]:
        return tuple(run.top for run in self.runs)

    @cached_property
    def bottoms(self) -> tuple[SuffixStart, ...]:
        return tuple(run.bottom for run in self.runs)

    @cached_property
    def distinct(self) -> DistinctListing:
        return DistinctListing(self.heads)

    def stats(self) -> dict[str, object]:
        return {
            "nrows": self.alignment.nrows,
            "m": self.alignment.width,
            "N": self.n_entries,
            "r_prime": self.r_prime,
        }


def build_index(ma: MultipleAlignment) -> MariaIndex:
    e = build_annotated_ebwt(ma)
    runs = compress_runs(e)
    assert sum(run_lengths(e)) == e.n
    return MariaIndex(tuple(runs), ma)


def serialize(ix: MariaIndex) -> bytes:
    ma = ix.alignment
    header = f"{ma.nrows} {ma.width}"
    if ma.alphabet != DNA:
        header += f" {ma.alphabet}"
    lines = [f"{MAGIC} {VERSION}", header]
    for row in range(ma.nrows):
        cols = ",".join(map(str, ma.column_map(row)))
        lines.append(f"{ma.ungapped(row)} {cols}")
    lines.append(f"RUNS {ix.r_prime}")
    for run in ix.runs:
        lines.append(str(run))
    return ("\n".join(lines) + "\n").encode("ascii")


def _int(token: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise IndexFormatError(f"expected an integer for {what}, got {token!r}") from None
    if value < 0:
        raise IndexFormatError(f"negative {what}: {value}")
    return value


def deserialize(data: bytes) -> MariaIndex:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise IndexFormatError("bad magic: index file is not ASCII text") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    parts = lines[0].split() if lines else []
    if not parts or parts[0] != MAGIC or len(parts) != 2:
        raise IndexFormatError("bad magic: not a MARIA index")
    if parts[1] != str(VERSION):
        raise IndexFormatError(f"version mismatch: file has {parts[1]}, expected {VERSION}")

    def line(k: int) -> str:
        if k >= len(lines):
            raise IndexFormatError(f"truncated index: missing line {k + 1}")
        return lines[k]

    head = line(1).split()
    if len(head) not in (2, 3):
        raise IndexFormatError("malformed header line: expected '<nrows> <m> [<alphabet>]'")
    nrows, width = _int(head[0], "row count"), _int(head[1], "width")
    alphabet = head[2] if len(head) == 3 else DNA

    sequences, columns = [], []
    for k in range(nrows):
        fields = line(2 + k).split(" ")
        if len(fields) != 2:
            raise IndexFormatError(f"malformed row line {3 + k}")
        seq, cols = fields
        sequences.append(seq)
        columns.append([_int(c, "column") for c in cols.split(",")] if cols else [])
    try:
        ma = MultipleAlignment.from_ungapped(sequences, columns, width, alphabet=alphabet)
    except AlignmentError as exc:
        raise IndexFormatError(f"invariant violation: {exc}") from None
    if ma.width != width or ma.nrows != nrows:
        raise IndexFormatError("invariant violation: header does not match rows")

    k = 2 + nrows
    marker = line(k).split()
    if len(marker) != 2 or marker[0] != "RUNS":
        raise IndexFormatError(f"line {k + 1}: expected 'RUNS <count>'")
    count = _int(marker[1], "run count")
    runs = []
    for i in range(count):
        fields = line(k + 1 + i).split()
        if len(fields) != 3:
            raise IndexFormatError(f"malformed run line {k + 2 + i}")
        col = TERMINATOR if fields[0] == "?" else _int(fields[0], "run head")
        runs.append(Run(col, _int(fields[1], "t_row"), _int(fields[2], "b_row")))
    if len(lines) > k + 1 + count:
        raise IndexFormatError("trailing data after the run table")
    if count > ma.n_entries:
        raise IndexFormatError(f"invariant violation: {count} runs for {ma.n_entries} suffixes")
    return MariaIndex(tuple(runs), ma)


def save_index(ix: MariaIndex, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(ix))


def load_index(path) -> MariaIndex:
    with open(path, "rb") as fh:
        return deserialize(fh.read())
