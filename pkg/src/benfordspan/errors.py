"""Exception types shared across the library and mapped to CLI exit codes."""

from __future__ import annotations


class EmptySampleError(ValueError):
    """Raised when a statistic needs data but every value was zero or absent."""


class ParameterOutOfRangeError(ValueError):
    """Raised when a witness parameter falls outside its valid open interval.

    The message always names the interval so callers can correct the input.
    """

    def __init__(self, message: str, valid_interval: tuple[float, float] | None = None):
        super().__init__(message)
        self.valid_interval = valid_interval


class RangeCaseError(ValueError):
    """Raised when an operation is called on the wrong branch of the range
    trichotomy (for example asking for an infeasibility certificate of a
    range that does admit Benford distributions)."""


class UnknownColumnError(ValueError):
    """Raised when the requested column does not exist in the input file."""


class NoNumericDataError(ValueError):
    """Raised when ingestion finds zero parseable numeric cells."""
