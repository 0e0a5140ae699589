"""Shared exception types for the mmp132 package."""


class Mmp132Error(Exception):
    """Base class for errors raised by this package."""


class PatternSyntaxError(Mmp132Error, ValueError):
    """A pattern string or coordinate tuple could not be parsed."""


class PermutationError(Mmp132Error, ValueError):
    """A sequence is not a permutation of 1..n."""


class CapExceededError(Mmp132Error):
    """A brute-force enumeration was requested beyond the configured cap."""


class UnsupportedPatternError(Mmp132Error):
    """The generating-function route does not cover this pattern shape.

    Raised for patterns with three or more nonzero coordinates and for
    patterns with empty-quadrant constraints.  The enumeration oracle
    handles those; the recursion machinery does not.
    """


class FormulaNotCoveredError(Mmp132Error):
    """No registered coefficient formula applies to this pattern shape."""


class FormulaThresholdError(Mmp132Error):
    """A coefficient formula exists for the shape but n is below its range."""


class ExactDivisionError(Mmp132Error, ArithmeticError):
    """An operation that must stay in integer coefficients could not."""


class OeisUnavailableError(Mmp132Error):
    """A sequence could not be obtained (offline with no fixture, or fetch failed)."""
