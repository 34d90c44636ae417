"""
Probability objects: states, conditional matrices, outcome distributions.

ProbState and CondMatrix are inputs and are validated on construction
(Dutch-book validity: entries in the unit interval, unit sums).
OutcomeDist is what the Born rule returns; it is never clamped, so it is
constructed unvalidated and exposes a ``valid`` flag instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from errors import DimensionError, ValidationError
from operators import ValidationReport

SIMPLEX_TOL = 1e-12


def _as_vector(values, name: str) -> np.ndarray:
    v = np.array(values, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has NaN or infinite entries")
    v.setflags(write=False)
    return v


def simplex_report(values: np.ndarray, tol: float = SIMPLEX_TOL, name: str = "p") -> ValidationReport:
    """Nonnegativity, upper bound 1 and unit sum of a probability vector."""
    violations = []
    lo = float(values.min())
    hi = float(values.max())
    violations.append((max(0.0, -lo), f"{name} has a negative entry {lo:.6g}"))
    violations.append((max(0.0, hi - 1.0), f"{name} has an entry above 1 ({hi:.6g})"))
    total = float(values.sum())
    violations.append((abs(total - 1.0), f"{name} sums to {total:.15g}, not 1"))
    return ValidationReport.from_violations(violations, tol)


@dataclass(frozen=True)
class ProbState:
    """An agent's probabilities p(i) for the N reference outcomes."""
    p: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", _as_vector(self.p, "p"))
        simplex_report(self.p, name="p").raise_if_failed("invalid probability state")

    @property
    def n(self) -> int:
        return self.p.size

    def to_dict(self) -> Dict:
        return {"p": self.p.tolist()}

    @classmethod
    def from_dict(cls, data: Dict) -> "ProbState":
        from utils import require_vector
        return cls(require_vector(data, "p"))


@dataclass(frozen=True)
class OutcomeDist:
    """Probabilities q(j) for the J outcomes of a measurement (may be invalid)."""
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", _as_vector(self.q, "q"))

    @property
    def n(self) -> int:
        return self.q.size

    def report(self, tol: float = SIMPLEX_TOL) -> ValidationReport:
        return simplex_report(self.q, tol, name="q")

    @property
    def valid(self) -> bool:
        return self.report().ok

    def to_dict(self) -> Dict:
        # Same file format as ProbState
        return {"p": self.q.tolist()}

    @classmethod
    def from_dict(cls, data: Dict) -> "OutcomeDist":
        from utils import require_vector
        return cls(require_vector(data, "p"))


@dataclass(frozen=True)
class CondMatrix:
    """R(j|i): row j is an outcome of the measurement, column i a reference outcome."""
    R: np.ndarray

    def __post_init__(self):
        r = np.array(self.R, dtype=float)
        if r.ndim != 2 or r.size == 0:
            raise DimensionError(f"R must be a non-empty J x N matrix, got shape {r.shape}")
        if not np.all(np.isfinite(r)):
            raise ValueError("R has NaN or infinite entries")
        r.setflags(write=False)
        object.__setattr__(self, "R", r)
        self.report().raise_if_failed("invalid conditional matrix")

    @property
    def J(self) -> int:
        return self.R.shape[0]

    @property
    def N(self) -> int:
        return self.R.shape[1]

    def row(self, j: int) -> np.ndarray:
        return self.R[j]

    def report(self, tol: float = SIMPLEX_TOL) -> ValidationReport:
        violations = [
            (max(0.0, -float(self.R.min())), f"R has a negative entry {self.R.min():.6g}"),
            (max(0.0, float(self.R.max()) - 1.0), f"R has an entry above 1 ({self.R.max():.6g})"),
        ]
        col_err = np.abs(self.R.sum(axis=0) - 1.0)
        worst = int(col_err.argmax())
        violations.append((float(col_err[worst]), f"column {worst} sums to {self.R[:, worst].sum():.15g}, not 1"))
        return ValidationReport.from_violations(violations, tol)

    def to_dict(self) -> Dict:
        return {"J": self.J, "N": self.N, "R": self.R.tolist()}

    @classmethod
    def from_dict(cls, data: Dict) -> "CondMatrix":
        from utils import require_int, require_matrix
        J = require_int(data, "J")
        N = require_int(data, "N")
        return cls(require_matrix(data, "R", shape=(J, N)))


def require_valid(obj, what: str):
    """Raise ValidationError if an OutcomeDist (or similar) fails its report."""
    report = obj.report()
    if not report.ok:
        raise ValidationError(f"{what}: {'; '.join(report.messages)}", report=report)
