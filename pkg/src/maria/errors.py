"""Exception hierarchy shared by the library and the command line."""


class MariaError(Exception):
    """Base class for every error raised by this package."""


class AlignmentError(MariaError, ValueError):
    """The multiple alignment text or a coordinate into it is invalid."""


class IndexFormatError(MariaError, ValueError):
    """An index file could not be decoded or fails its invariants."""


class QueryError(MariaError, ValueError):
    """A query is malformed or does not fit the indexed alignment."""
