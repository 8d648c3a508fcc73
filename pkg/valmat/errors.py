#!/usr/bin/env python3
"""
Errors
======

Exception hierarchy shared by the library and the command line tool.

All exceptions derive from :py:class:`ValmatError`, itself a
:py:class:`ValueError`, so callers that only care about "bad input" can keep
catching ``ValueError``.
"""


class ValmatError(ValueError):
    """Base class for all errors raised by ``valmat``"""

    # Exit code used by the command line tool
    exit_code = 1


class StructuralError(ValmatError):
    """Malformed objects: wrong base sizes, empty families, unknown
    elements, chains that are not cover chains..."""


class DomainError(ValmatError):
    """A precondition of an operation does not hold"""


class MembershipError(DomainError):
    """A point is not in the tropical linear space"""


class OrderError(DomainError):
    """Two points are not comparable in the vector order"""


class ResourceError(ValmatError):
    """An enumeration cap was exceeded"""


class InconclusiveError(ValmatError):
    """A brute force computation did not look far enough"""


class ParseError(ValmatError):
    """Text input could not be parsed

    Args:
        message (str): Error message
        line (int, optional): Line number (1-based)
        column (int, optional): Column number (1-based)
        path (str, optional): JSON path of the offending entry
    """

    exit_code = 2

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if path is not None:
            location.append(f"at {path}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super(ParseError, self).__init__(message)


class TheoremViolation(ValmatError, RuntimeError):
    """An identity guaranteed by the theory failed.

    This always signals a bug (or an invalid valuation that slipped past
    validation), never bad user input.
    """

    exit_code = 3


__all__ = [
    "ValmatError",
    "StructuralError",
    "DomainError",
    "MembershipError",
    "OrderError",
    "ResourceError",
    "InconclusiveError",
    "ParseError",
    "TheoremViolation",
]
