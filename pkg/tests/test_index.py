import pytest
from hypothesis import given, settings

from maria import (
    IndexFormatError,
    MultipleAlignment,
    build_annotated_ebwt,
    build_index,
    compress_runs,
    deserialize,
    parse_msa,
    serialize,
)
from maria.index import run_lengths
from maria.oracle import brute_force_ebwt
from helpers import TOY_RUNS, alignments


def brute_force_runs(ma):
    cols = [s.col for s in brute_force_ebwt(ma)]
    return sum(1 for k in range(len(cols)) if k == 0 or cols[k] != cols[k - 1])


def test_toy_runs(toy):
    runs = compress_runs(build_annotated_ebwt(toy))
    assert [tuple(r) for r in runs] == TOY_RUNS


def test_single_row_runs():
    assert [tuple(r) for r in compress_runs(build_annotated_ebwt(parse_msa("A")))] == [
        (None, 0, 0),
        (0, 0, 0),
    ]


@pytest.mark.parametrize("k", [1, 2, 3, 5])
@pytest.mark.parametrize("seq", ["GATTACAT", "AAAA", "ACGTTGCA", "T"])
def test_identical_rows_give_one_run_per_column(k, seq):
    ma = MultipleAlignment((seq,) * k)
    assert brute_force_runs(ma) == len(seq) + 1
    assert build_index(ma).r_prime == len(seq) + 1


def test_build_index_toy(toy_index):
    assert toy_index.r_prime == 12
    assert toy_index.n_entries == 45


@settings(max_examples=100)
@given(alignments())
def test_run_invariants(ma):
    e = build_annotated_ebwt(ma)
    ix = build_index(ma)
    assert sum(run_lengths(e)) == e.n
    assert ix.r_prime == len(run_lengths(e)) == brute_force_runs(ma)
    assert ix.r_prime <= e.n
    heads = ix.heads
    assert all(a != b for a, b in zip(heads, heads[1:]))
    assert build_index(ma).runs == ix.runs


def test_serialized_text_toy(toy_index):
    text = serialize(toy_index).decode()
    lines = text.split("\n")
    assert lines[0] == "MARIA 1"
    assert lines[1] == "5 10"
    assert lines[3] == "AGATACAT 0,1,2,3,5,6,7,8"
    assert lines[7] == "RUNS 12"
    assert lines[8:20] == ["? 1 4", "9 4 4", "5 1 4", "0 1 1", "7 1 4", "2 1 4",
                           "6 1 4", "1 1 4", "8 1 4", "3 1 2", "4 0 4", "3 0 4"]
    assert text.endswith("\n") and "\r" not in text


def test_round_trip_toy(toy_index):
    back = deserialize(serialize(toy_index))
    assert [tuple(r) for r in back.runs] == TOY_RUNS
    assert back.alignment.rows == toy_index.alignment.rows
    assert serialize(back) == serialize(toy_index)


def test_custom_alphabet_round_trip():
    ma = MultipleAlignment(("BA-C", "BAAC"), alphabet="CBA")
    ix = build_index(ma)
    data = serialize(ix)
    assert data.split(b"\n")[1] == b"2 4 CBA"
    back = deserialize(data)
    assert back.alignment.alphabet == "CBA"
    assert back.runs == ix.runs


def _corrupt(data: bytes, old: bytes, new: bytes) -> bytes:
    assert old in data
    return data.replace(old, new, 1)


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda d: b"", "bad magic"),
        (lambda d: b"\x89PNG\r\n", "bad magic"),
        (lambda d: b"HELLO 1\n" + d.split(b"\n", 1)[1], "bad magic"),
        (lambda d: _corrupt(d, b"MARIA 1", b"MARIA 2"), "version mismatch"),
        (lambda d: d[: d.index(b"RUNS")], "truncated"),
        (lambda d: b"\n".join(d.split(b"\n")[:12]), "truncated"),
        (lambda d: _corrupt(d, b"\n0 1 1\n", b"\n5 1 1\n"), "share head"),
        (lambda d: _corrupt(d, b"\n0 1 1\n", b"\n0 2 2\n"), "invalid endpoint"),
        (lambda d: _corrupt(d, b"\n9 4 4\n", b"\n9 7 4\n"), "invalid endpoint"),
        (lambda d: _corrupt(d, b"0,1,2,3,5", b"0,1,2,2,5"), "strictly increasing"),
        (lambda d: _corrupt(d, b"RUNS 12", b"RUNS x"), "integer"),
        (lambda d: d + b"junk\n", "trailing"),
    ],
)
def test_deserialize_errors(toy_index, mutate, message):
    with pytest.raises(IndexFormatError, match=message):
        deserialize(mutate(serialize(toy_index)))
