"""Exception types shared across the package."""

from __future__ import annotations


class CassonError(Exception):
    """Base class for every error raised on purpose by this package."""


class MatchingError(CassonError, ValueError):
    """Chord endpoints do not form a perfect matching of the legs."""


class ParseError(CassonError, ValueError):
    """Malformed textual, JSON or PD input."""


class ArgumentError(CassonError, ValueError):
    """Arguments are well formed but violate a precondition."""


class IncompleteDataError(CassonError, KeyError):
    """Sublink data required by a formula is missing."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""
