"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: DataError -> 2, InvariantError -> 3.
"""


class RanksumError(Exception):
    """Base class for all errors raised by this package."""


class DataError(RanksumError):
    """Bad or inconsistent user-supplied data (files, corpora, configs)."""


class InvariantError(RanksumError):
    """An internal consistency check failed; indicates a bug, not bad input."""
