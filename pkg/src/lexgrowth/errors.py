"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LexGrowthError(Exception):
    """Base class for all package errors."""


class UsageError(LexGrowthError, ValueError):
    """Malformed arguments: length mismatch, inhomogeneous sets, bad axis."""


class DefinednessError(LexGrowthError, ValueError):
    """A value is requested outside the range where it is defined.

    Typical cause: a size ``d`` larger than the degree stratum it must fit in,
    or a multi-cap ring whose caps are not sorted ascending.
    """


class BudgetExceeded(LexGrowthError):
    """An exhaustive search would examine more subsets than allowed."""

    def __init__(self, subsets: int, budget: int):
        super().__init__(f"search needs {subsets} subsets, budget is {budget}")
        self.subsets = subsets
        self.budget = budget


class OracleMismatch(LexGrowthError, AssertionError):
    """A closed-form value disagreed with its brute-force oracle."""


class ParseError(UsageError):
    """Unparseable monomial/set/ring text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
