"""Shared test data and hypothesis strategies."""

from pathlib import Path

from hypothesis import strategies as st

from maria import MultipleAlignment

DATA = Path(__file__).parent / "data"

TOY_ROWS = ("-GATTACAT-", "AGAT-ACAT-", "-GAT-ACAT-", "-GATTAGAT-", "-GATTAGATA")

# (head, t_row, b_row) of the 12 runs of the toy alignment
TOY_RUNS = [
    (None, 1, 4), (9, 4, 4), (5, 1, 4), (0, 1, 1), (7, 1, 4), (2, 1, 4),
    (6, 1, 4), (1, 1, 4), (8, 1, 4), (3, 1, 2), (4, 0, 4), (3, 0, 4),
]


@st.composite
def alignments(draw, max_rows=5, max_width=12, alphabet="ACGT"):
    """Small alignments over a few symbols, biased towards repeated rows and gaps."""
    width = draw(st.integers(1, max_width))
    symbols = draw(st.sampled_from([alphabet[:2], alphabet]))
    cell = st.sampled_from(symbols + "-")
    row = st.text(alphabet=cell, min_size=width, max_size=width).filter(lambda r: r.strip("-"))
    first = draw(row)
    rows = [first]
    for _ in range(draw(st.integers(0, max_rows - 1))):
        rows.append(draw(st.one_of(st.just(first), row)))
    return MultipleAlignment(tuple(rows), alphabet=alphabet)
