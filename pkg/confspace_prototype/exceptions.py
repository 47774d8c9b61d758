"""Exceptions raised by the configuration space toolkit"""

from typing import Optional


class ConfspaceError(Exception):
    """Base class of every domain failure raised by the package."""


class BoundarySquareError(ConfspaceError):
    """The composite of two consecutive differentials is not zero."""

    def __init__(self, message: str, cell: Optional[str] = None):
        super().__init__(message)
        self.cell = cell


class ChainMapError(ConfspaceError):
    """A family of matrices does not commute with the differential."""

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


class GuardrailError(ConfspaceError):
    """A computation was refused because its estimated size exceeds the caps."""

    def __init__(self, message: str, estimate: Optional[int] = None):
        super().__init__(message)
        self.estimate = estimate


class ParseError(ConfspaceError, ValueError):
    """Malformed mapping class or word input."""
