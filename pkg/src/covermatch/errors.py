"""Exception hierarchy shared across the package."""


class CovermatchError(Exception):
    """Base class for all errors raised by covermatch."""


class CatalogError(CovermatchError):
    """Catalog file is malformed or violates catalog invariants."""


class FormatError(CovermatchError):
    """A binary or structured-text artifact file cannot be read or written."""


class DataError(CovermatchError):
    """Inputs violate an operation's contract (shapes, ids, availability)."""


class ScorerProtocolError(CovermatchError):
    """The external pair scorer misbehaved on the wire."""
