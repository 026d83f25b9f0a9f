"""Command-line interface.

Exit codes: 0 ok, 1 usage error, 2 input or index error, 3 query error or
verification failure, 4 pattern not found.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .alignment import DNA, SuffixStart, detect_format, parse_msa
from .ebwt import build_annotated_ebwt
from .errors import MariaError, QueryError
from .index import build_index, load_index, save_index
from .oracle import oracle_occurrences
from .query import MatchSpec, aggregate, check_pattern, locate_one

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_QUERY, EXIT_ABSENT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="maria", description="Column aggregation index over a multiple alignment.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("build", help="build an index from an alignment")
    b.add_argument("--msa", required=True, help="aligned FASTA or plain one-row-per-line file")
    b.add_argument("--out", required=True, help="index file to write")
    b.add_argument("--format", choices=("fasta", "plain"), help="input format (default: detect)")
    b.add_argument("--alphabet", default=DNA, help="symbols in sort order (default: %(default)s)")

    q = sub.add_parser("query", help="distinct columns for a match given by its start and length")
    q.add_argument("--index", required=True)
    q.add_argument("--row", type=int, required=True)
    q.add_argument("--col", type=int, required=True)
    q.add_argument("--len", type=int, required=True, dest="length")
    q.add_argument("--verify", action="store_true", help="cross-check against a brute-force scan")

    f = sub.add_parser("find", help="locate a pattern and report its distinct columns")
    f.add_argument("--index", required=True)
    f.add_argument("--pattern", required=True)
    f.add_argument("--verify", action="store_true", help="cross-check against a brute-force scan")

    s = sub.add_parser("stats", help="print index statistics")
    s.add_argument("--index", required=True)

    e = sub.add_parser("ebwt", help="dump the annotated eBWT of an alignment as TSV")
    e.add_argument("--msa", required=True)
    e.add_argument("--format", choices=("fasta", "plain"))
    e.add_argument("--alphabet", default=DNA)
    return p


def _read_msa(args):
    with open(args.msa) as fh:
        text = fh.read()
    return parse_msa(text, format=args.format or detect_format(text), alphabet=args.alphabet)


def _print_kv(pairs) -> None:
    for key, value in pairs:
        print(f"{key}\t{value}")


def _verify(ix, start: SuffixStart, length: int, columns) -> None:
    upos = ix.alignment.col_to_upos(start.row, start.col)
    pattern = ix.alignment.ungapped(start.row)[upos : upos + length]
    expected = list(oracle_occurrences(ix.alignment, pattern).columns)
    if sorted(columns) != expected:
        raise QueryError(
            f"verification failed for {pattern!r}: index gave {sorted(columns)}, scan gave {expected}"
        )


def cmd_build(args) -> int:
    ma = _read_msa(args)
    ix = build_index(ma)
    save_index(ix, args.out)
    _print_kv(ix.stats().items())
    return EXIT_OK


def cmd_ebwt(args) -> int:
    sys.stdout.write(build_annotated_ebwt(_read_msa(args)).to_tsv())
    return EXIT_OK


def cmd_stats(args) -> int:
    ix = load_index(args.index)
    stats = ix.stats()
    _print_kv(stats.items())
    print(f"N/r_prime\t{stats['N'] / stats['r_prime']:.3f}")
    return EXIT_OK


def cmd_query(args) -> int:
    ix = load_index(args.index)
    start = SuffixStart(args.row, args.col)
    try:
        result = aggregate(ix, MatchSpec(start, args.length))
        if args.verify:
            _verify(ix, start, args.length, result.columns)
    except QueryError as exc:
        print(f"maria: {exc}", file=sys.stderr)
        return EXIT_QUERY
    for col in result.sorted_columns:
        print(col)
    return EXIT_OK


def cmd_find(args) -> int:
    ix = load_index(args.index)
    try:
        check_pattern(ix.alignment, args.pattern)
    except QueryError as exc:
        print(f"maria: {exc}", file=sys.stderr)
        return EXIT_INPUT
    start = locate_one(ix.alignment, args.pattern)
    if start is None:
        print(f"maria: pattern not found: {args.pattern}", file=sys.stderr)
        return EXIT_ABSENT
    try:
        result = aggregate(ix, MatchSpec(start, len(args.pattern)))
        if args.verify:
            _verify(ix, start, len(args.pattern), result.columns)
    except QueryError as exc:
        print(f"maria: {exc}", file=sys.stderr)
        return EXIT_QUERY
    print(f"{start.row}\t{start.col}")
    for col in result.sorted_columns:
        print(col)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "query": cmd_query,
    "find": cmd_find,
    "stats": cmd_stats,
    "ebwt": cmd_ebwt,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (MariaError, OSError) as exc:
        print(f"maria: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
