from collections import Counter

from hypothesis import given, settings

from maria import TERMINATOR, SuffixStart, build_annotated_ebwt, col_annotations, parse_msa
from maria.lce import compare_starts
from maria.oracle import brute_force_ebwt
from helpers import DATA, alignments


def test_toy_tsv_fixture(toy):
    # reference table kept as data, never regenerated from this package
    assert build_annotated_ebwt(toy).to_tsv() == (DATA / "toy_ebwt.tsv").read_text()


def test_named_entries(toy):
    e = build_annotated_ebwt(toy)
    assert e.n == 45
    assert e[0] == ("T", SuffixStart(1, TERMINATOR))
    assert e.suffix(0) == "$AGATACA"
    assert e[5] == ("T", SuffixStart(4, 9))
    assert e.suffix(5) == "A$GATTAGA"
    assert e[44] == ("A", SuffixStart(4, 3))
    assert e.suffix(44) == "TTAGATA$G"


def test_col_string(toy):
    col = col_annotations(build_annotated_ebwt(toy))
    assert col[:6] == [TERMINATOR] * 5 + [9]
    assert col[6:12] == [5, 5, 5, 5, 5, 0]


def test_single_row_col_string():
    assert col_annotations(build_annotated_ebwt(parse_msa("A"))) == [TERMINATOR, 0]


@settings(max_examples=200)
@given(alignments())
def test_matches_brute_force_and_invariants(ma):
    e = build_annotated_ebwt(ma)
    starts = [entry.start for entry in e.entries]
    assert starts == brute_force_ebwt(ma)
    assert e.n == sum(len(ma.ungapped(r)) + 1 for r in range(ma.nrows))
    assert len(set(starts)) == e.n
    for a, b in zip(starts, starts[1:]):
        assert compare_starts(ma, a, b) < 0
    expected = Counter("".join(ma.ungapped(r) for r in range(ma.nrows)) + ma.terminator * ma.nrows)
    assert Counter(entry.bwt_char for entry in e.entries) == expected
    for entry in e.entries:
        start = entry.start
        assert entry.bwt_char == ma.rotation_char(start, ma.period(start.row) - 1)
