"""Exception hierarchy shared by every package.

Each class subclasses a builtin so callers can keep catching ``ValueError``
or ``RuntimeError`` the way they would for plain numpy/scipy failures.
"""

from __future__ import annotations

from typing import Optional


class DimensionError(ValueError):
    """Shapes or dimensions do not fit together (or d is unsupported)."""


class ValidationError(ValueError):
    """A precondition validity check failed; the report says which."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ConvergenceError(RuntimeError):
    """Fiducial search finished every restart without reaching tol."""

    def __init__(self, message: str, best_error: float):
        super().__init__(message)
        self.best_error = best_error


class SpanError(ValueError):
    """Linear-extension samples do not span the full space."""

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


class InconsistencyError(ValueError):
    """Samples cannot come from one linear functional within tol."""

    def __init__(self, message: str, worst_index: int, residual: float):
        super().__init__(message)
        self.worst_index = worst_index
        self.residual = residual


class FileFormatError(ValueError):
    """An input file is unreadable or has a malformed field."""

    def __init__(self, message: str, path: Optional[str] = None,
                 field: Optional[str] = None):
        super().__init__(message)
        self.path = path
        self.field = field
