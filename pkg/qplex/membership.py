"""
Which probability vectors are physical.

Validity of a state is decided exactly by rebuilding its operator
(``prob_to_state``) and testing positivity; validity of a measurement row by
rebuilding its effect and checking 0 <= D <= I. The polar and ball tests are
the geometric necessary conditions from the inner-product bounds.
"""

from __future__ import annotations

import numpy as np

from errors import DimensionError
from operators import ValidationReport, eigenvalues, validate_density
from representation import ProbState, prob_to_state
from sic import SicSystem
from .geometry import QplexGeometry

DEFAULT_TOL = 1e-10
SUM_TOL = 1e-12
POLAR_TOL = 1e-12


def _unit_sum(s, name: str = "s") -> np.ndarray:
    v = np.asarray(s, dtype=float).reshape(-1)
    if abs(v.sum() - 1.0) > SUM_TOL:
        raise ValueError(f"{name} must sum to 1 (sums to {v.sum():.15g})")
    return v


def in_polar(s, states, L: float) -> bool:
    """True iff (s, p) >= L for every p in states."""
    v = _unit_sum(s)
    if not len(states):
        return True
    vecs = np.array([p.p for p in states])
    if vecs.shape[1] != v.size:
        raise DimensionError("s and the states have different lengths")
    return bool(np.all(vecs @ v >= L - POLAR_TOL))


def in_ball(s, geom: QplexGeometry) -> bool:
    """Inside the in-ball: |s - iota| <= r_in."""
    v = _unit_sum(s)
    return bool(np.linalg.norm(v - 1.0 / geom.N) <= geom.r_in + POLAR_TOL)


def in_out_ball(s, geom: QplexGeometry) -> bool:
    """Inside the out-ball: |s - iota| <= r_out."""
    v = _unit_sum(s)
    return bool(np.linalg.norm(v - 1.0 / geom.N) <= geom.r_out + POLAR_TOL)


def valid_state(p: ProbState, sic: SicSystem, tol: float = DEFAULT_TOL) -> ValidationReport:
    return validate_density(prob_to_state(p, sic), tol)


def effect_operator(r, sic: SicSystem) -> np.ndarray:
    """D = sum_i r(i) ((d+1) E_i - I/d)."""
    v = np.asarray(r, dtype=float).reshape(-1)
    if v.size != sic.n_outcomes:
        raise DimensionError(f"r has {v.size} entries, SIC has {sic.n_outcomes} outcomes")
    d = sic.d
    effect = np.einsum("i,ikl->kl", v, (d + 1) * sic.effects - np.eye(d) / d)
    return (effect + effect.conj().T) / 2


def valid_effect(r, sic: SicSystem, tol: float = DEFAULT_TOL) -> ValidationReport:
    """ok iff the reconstructed effect satisfies 0 <= D <= I within tol.

    Raises ValueError when r has entries outside the unit interval (not even
    Dutch-book valid).
    """
    v = np.asarray(r, dtype=float).reshape(-1)
    if v.min() < -SUM_TOL or v.max() > 1 + SUM_TOL:
        raise ValueError("measurement row entries must lie in the unit interval")
    lam = eigenvalues(effect_operator(v, sic))
    return ValidationReport.from_violations([
        (max(0.0, -float(lam[0])), f"effect has negative eigenvalue {lam[0]:.6g}"),
        (max(0.0, float(lam[-1]) - 1.0), f"effect has eigenvalue {lam[-1]:.6g} above 1"),
    ], tol)


def effect_from_state(p: ProbState, d: int) -> np.ndarray:
    """Scale a state into the unit cube: r = min(d, 1/max p) * p.

    For a physical state the factor is d and the rebuilt effect is the
    state's own density matrix.
    """
    if p.n != d * d:
        raise DimensionError(f"p has {p.n} entries, expected {d * d}")
    return min(float(d), 1.0 / float(p.p.max())) * p.p
