"""
The Born rule in probabilistic form, and the Law of Total Probability it replaces.

    q(j) = sum_i ((d+1) p(i) - 1/d) R(j|i)      (q = R Phi p)
    s(j) = sum_i R(j|i) p(i)                   (s = R p)

Replacing Phi with the identity turns the first into the second; the gap
between them (ltp_deviation) is the irreducible margin by which quantum
probabilities depart from classical marginalisation. ``born`` never clamps:
if p and R are not jointly physical the result can leave the simplex, which
the caller sees through ``OutcomeDist.valid``.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from errors import DimensionError
from operators import as_matrix
from .conversions import phi_matrix
from .types import CondMatrix, OutcomeDist, ProbState


def _check_sizes(p: ProbState, R: CondMatrix, d: Optional[int] = None):
    if R.N != p.n:
        raise DimensionError(f"R has {R.N} columns but p has {p.n} entries")
    if d is not None and p.n != d * d:
        raise DimensionError(f"p has {p.n} entries, expected d^2 = {d * d}")


def born_matrix(p: ProbState, R: CondMatrix, d: int, phi: Optional[np.ndarray] = None) -> OutcomeDist:
    """q = R Phi p, with an optional replacement for Phi."""
    _check_sizes(p, R, d)
    phi = phi_matrix(d) if phi is None else np.asarray(phi, dtype=float)
    if phi.shape != (p.n, p.n):
        raise DimensionError(f"phi must be {p.n} x {p.n}, got {phi.shape}")
    return OutcomeDist(R.R @ (phi @ p.p))


def born(p: ProbState, R: CondMatrix, d: int) -> OutcomeDist:
    return born_matrix(p, R, d)


def ltp(p: ProbState, R: CondMatrix) -> OutcomeDist:
    _check_sizes(p, R)
    return OutcomeDist(R.R @ p.p)


def ltp_deviation(p: ProbState, R: CondMatrix, d: int) -> float:
    """max_j |born(p, R, d)(j) - ltp(p, R)(j)|."""
    return float(np.max(np.abs(born(p, R, d).q - ltp(p, R).q)))


def oracle_probabilities(rho, effects: Sequence) -> np.ndarray:
    """Trace-form Born rule tr(rho D_j), the reference the probabilistic form must match."""
    m = as_matrix(rho)
    mats = np.array([as_matrix(e) for e in effects])
    return np.real(np.einsum("kl,jlk->j", m, mats))
