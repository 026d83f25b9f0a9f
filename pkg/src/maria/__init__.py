"""MARIA: a multiple-alignment index that reports the distinct columns where
matches start, given one match position and its length."""

from .alignment import DNA, TERMINATOR, MultipleAlignment, SuffixStart, parse_msa
from .distinct import DistinctListing, SparseTableRMQ
from .ebwt import AnnotatedEbwt, EbwtEntry, build_annotated_ebwt, col_annotations
from .errors import AlignmentError, IndexFormatError, MariaError, QueryError
from .index import MariaIndex, Run, build_index, compress_runs, deserialize, load_index, save_index, serialize
from .lce import LceResult, Order, lce
from .oracle import OccurrenceList, generate_alignment, oracle_occurrences
from .query import AggregationResult, MatchSpec, QueryStats, aggregate, find_interval, find_run, locate_one

__version__ = "0.1.0"

__all__ = [
    "DNA",
    "TERMINATOR",
    "AggregationResult",
    "AlignmentError",
    "AnnotatedEbwt",
    "DistinctListing",
    "EbwtEntry",
    "IndexFormatError",
    "LceResult",
    "MariaError",
    "MariaIndex",
    "MatchSpec",
    "MultipleAlignment",
    "OccurrenceList",
    "Order",
    "QueryError",
    "QueryStats",
    "Run",
    "SparseTableRMQ",
    "SuffixStart",
    "aggregate",
    "build_annotated_ebwt",
    "build_index",
    "col_annotations",
    "compress_runs",
    "deserialize",
    "find_interval",
    "find_run",
    "generate_alignment",
    "lce",
    "load_index",
    "locate_one",
    "oracle_occurrences",
    "parse_msa",
    "save_index",
    "serialize",
]
