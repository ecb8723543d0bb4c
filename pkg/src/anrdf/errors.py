"""Exception types shared across the package."""

from __future__ import annotations


class AnrdfError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatchError(AnrdfError):
    """Two annotation values from different domains were combined."""


class AnnotationSyntaxError(AnrdfError):
    """An annotation literal does not parse in its declared domain."""


class NotALatticeError(AnrdfError):
    """A compound domain was requested with a first component whose meet
    is not the greatest lower bound of the induced order."""


class UnknownDomainError(AnrdfError):
    """Domain identifier not present in the registry."""


class SaturationBoundError(AnrdfError):
    """Input too large for the doubly-exponential reference saturation."""


class TemporalValueError(AnrdfError):
    """A temporal built-in was applied outside its domain of definition
    (e.g. length of an unbounded interval)."""


class ClosureIterationError(AnrdfError):
    """The closure engine exceeded its rule-firing cap."""


class ParseError(AnrdfError):
    """Syntax error in a data document or query, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class QueryTypeError(AnrdfError):
    """Evaluation-time type error (e.g. ordering mutually unorderable values)."""
