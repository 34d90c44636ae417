"""
Dense complex-matrix layer.

Operators (density matrices, POVM elements, SIC projectors, the identity)
are plain ``numpy`` complex128 arrays of shape (d, d). This module holds
the checks everything else builds on:

* trace pairing ``Re tr(a b)`` - the tr{rho D_j} of the trace-form Born rule
* Hermiticity as the max-abs entry deviation from the conjugate transpose
* positivity via the smallest eigenvalue of a Hermitian eigensolver
* density-matrix, POVM and unitarity reports

All functions are pure; inputs are never modified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from scipy import linalg

from errors import DimensionError, ValidationError

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
MAX_DIMENSION = 32


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validity check: ok iff max_violation <= tol."""
    ok: bool
    max_violation: float
    tol: float
    messages: List[str] = field(default_factory=list)

    @classmethod
    def from_violations(cls, violations: Sequence[tuple], tol: float) -> "ValidationReport":
        """Build a report from (amount, message) pairs; amounts <= tol pass."""
        worst = max((float(v) for v, _ in violations), default=0.0)
        worst = max(worst, 0.0)
        messages = [msg for v, msg in violations if v > tol]
        return cls(ok=worst <= tol, max_violation=worst, tol=tol, messages=messages)

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        tol = min(self.tol, other.tol)
        worst = max(self.max_violation, other.max_violation)
        return ValidationReport(ok=self.ok and other.ok, max_violation=worst,
                                tol=tol, messages=self.messages + other.messages)

    def raise_if_failed(self, what: str):
        if not self.ok:
            detail = "; ".join(self.messages) or f"violation {self.max_violation:.3g}"
            raise ValidationError(f"{what}: {detail}", report=self)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "max_violation": self.max_violation,
                "tol": self.tol, "messages": list(self.messages)}


# ----------------------------------------------------------------------
# Coercion
# ----------------------------------------------------------------------
def as_matrix(a, square: bool = True) -> np.ndarray:
    """Coerce to a finite complex128 2-D array (square unless told otherwise)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {m.shape}")
    if square and m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIMENSION:
        raise DimensionError(f"matrix size {m.shape[0]} exceeds supported maximum {MAX_DIMENSION}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has NaN or infinite entries")
    return m


def hermitian_deviation(a) -> float:
    m = as_matrix(a)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    return hermitian_deviation(a) <= tol


# ----------------------------------------------------------------------
# Core operations
# ----------------------------------------------------------------------
def trace_inner_product(a, b) -> float:
    """Return Re tr(a b) for two square matrices of the same size."""
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape:
        raise DimensionError(f"size mismatch: {ma.shape} vs {mb.shape}")
    # tr(ab) = sum_ij a_ij b_ji
    return float(np.real(np.sum(ma * mb.T)))


def min_eigenvalue(a) -> float:
    m = as_matrix(a)
    herm = (m + m.conj().T) / 2
    return float(linalg.eigvalsh(herm)[0])


def eigenvalues(a) -> np.ndarray:
    """Ascending eigenvalues of the Hermitian part of ``a``."""
    m = as_matrix(a)
    return linalg.eigvalsh((m + m.conj().T) / 2)


def check_psd(a, tol: float = PSD_TOL) -> ValidationReport:
    """ok iff the smallest eigenvalue is >= -tol.

    Raises ValidationError when ``a`` is not Hermitian within tol.
    """
    dev = hermitian_deviation(a)
    if dev > tol:
        raise ValidationError(f"matrix is not Hermitian (deviation {dev:.3g} > {tol:g})")
    lam_min = min_eigenvalue(a)
    violation = max(0.0, -lam_min)
    return ValidationReport.from_violations(
        [(violation, f"negative eigenvalue {lam_min:.6g}")], tol)


def validate_density(rho, tol: float = PSD_TOL) -> ValidationReport:
    """ok iff rho is Hermitian, PSD and has unit trace, each within tol."""
    m = as_matrix(rho)
    dev = hermitian_deviation(m)
    violations = [(dev, f"not Hermitian (deviation {dev:.3g})")]
    lam_min = min_eigenvalue(m)
    violations.append((max(0.0, -lam_min), f"negative eigenvalue {lam_min:.6g}"))
    trace = complex(np.trace(m))
    trace_err = abs(trace - 1.0)
    violations.append((trace_err, f"trace {trace.real:.12g} != 1"))
    return ValidationReport.from_violations(violations, tol)


def validate_povm(effects: Sequence, tol: float = PSD_TOL) -> ValidationReport:
    """ok iff every effect is PSD within tol and the effects sum to the identity."""
    if len(effects) == 0:
        raise ValueError("POVM must have at least one element")
    mats = [as_matrix(e) for e in effects]
    d = mats[0].shape[0]
    if any(m.shape != (d, d) for m in mats):
        raise DimensionError("POVM elements have different sizes")

    violations = []
    for j, m in enumerate(mats):
        dev = hermitian_deviation(m)
        violations.append((dev, f"element {j} not Hermitian (deviation {dev:.3g})"))
        lam_min = min_eigenvalue(m)
        violations.append((max(0.0, -lam_min), f"element {j} has negative eigenvalue {lam_min:.6g}"))
    total = np.sum(mats, axis=0)
    completeness = float(np.max(np.abs(total - np.eye(d))))
    violations.append((completeness, f"elements sum to identity only within {completeness:.3g}"))
    return ValidationReport.from_violations(violations, tol)


def check_unitary(u, tol: float = HERMITIAN_TOL) -> ValidationReport:
    m = as_matrix(u)
    err = float(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))))
    return ValidationReport.from_violations([(err, f"U U^dagger deviates from identity by {err:.3g}")], tol)


# ----------------------------------------------------------------------
# Random factories (tests, fuzzers, CLI demos)
# ----------------------------------------------------------------------
def _ginibre(d: int, k: int, rng: np.random.Generator) -> np.ndarray:
    return rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))


def random_density(d: int, rng: np.random.Generator, rank: Optional[int] = None) -> np.ndarray:
    """rho = A A^dagger / tr(A A^dagger) with A a d x rank Ginibre matrix."""
    a = _ginibre(d, rank or d, rng)
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_pure_state(d: int, rng: np.random.Generator) -> np.ndarray:
    return random_density(d, rng, rank=1)


def random_povm(d: int, outcomes: int, rng: np.random.Generator) -> List[np.ndarray]:
    """Normalised random PSD sum: D_j = S^{-1/2} P_j S^{-1/2}, S = sum P_j."""
    parts = [random_density(d, rng) for _ in range(outcomes)]
    total = np.sum(parts, axis=0)
    w, v = linalg.eigh((total + total.conj().T) / 2)
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    effects = [inv_sqrt @ p @ inv_sqrt for p in parts]
    # Symmetrise away round-off so downstream Hermiticity checks are tight
    return [(e + e.conj().T) / 2 for e in effects]
