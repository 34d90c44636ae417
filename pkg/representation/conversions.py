"""
Operator objects <-> probability objects through a SIC reference measurement.

    p(i)     = tr(rho E_i)
    rho      = sum_i ((d+1) p(i) - 1/d) Pi_i
    R(j|i)   = tr(Pi_i D_j)
    D_j      = sum_i R(j|i) ((d+1) E_i - I/d)

Every conversion takes an explicit SicSystem. Inverse conversions return
Hermitian, correctly normalised operators that need not be positive:
physical validity is the membership test in ``qplex``.

Reference states, the Phi matrix and the double-pass matrix are closed
forms and need no SIC at all.
"""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from errors import DimensionError
from operators import as_matrix, validate_density, validate_povm
from sic import SicSystem
from .types import CondMatrix, ProbState

DENSITY_TOL = 1e-10
POVM_TOL = 1e-10


def _check_d(d: int) -> int:
    if int(d) != d or d < 2:
        raise DimensionError(f"dimension must be an integer >= 2, got {d}")
    return int(d)


def reference_states(d: int) -> List[ProbState]:
    """e_k(i) = delta_ik/(d+1) + 1/(d(d+1)) for k = 0..d^2-1."""
    return [ProbState(col) for col in reference_matrix(d).T]


def reference_matrix(d: int) -> np.ndarray:
    """N x N matrix whose columns are the reference states."""
    d = _check_d(d)
    n = d * d
    return np.eye(n) / (d + 1) + 1.0 / (d * (d + 1))


def phi_matrix(d: int) -> np.ndarray:
    """Phi_ij = (d+1) delta_ij - 1/d, the inverse of reference_matrix(d)."""
    d = _check_d(d)
    n = d * d
    return (d + 1) * np.eye(n) - 1.0 / d


def double_pass_matrix(d: int) -> CondMatrix:
    """Conditional matrix of passing a system through the reference apparatus twice."""
    return CondMatrix(reference_matrix(d))


def garbage_disposal(J: int, N: int) -> CondMatrix:
    """Apparatus whose outcome is uniform whatever goes in."""
    if J < 1 or N < 1:
        raise DimensionError("J and N must be positive")
    return CondMatrix(np.full((J, N), 1.0 / J))


def coarse_grain(R: CondMatrix, groups: Sequence[Sequence[int]]) -> CondMatrix:
    """Merge outcomes: new row g is the sum of the rows listed in groups[g].

    Every original outcome must appear in exactly one group.
    """
    flat = sorted(j for g in groups for j in g)
    if flat != list(range(R.J)):
        raise ValueError(f"groups must partition the {R.J} outcomes exactly once")
    return CondMatrix(np.array([R.R[list(g)].sum(axis=0) for g in groups]))


def fine_grain(R: CondMatrix, n: int) -> CondMatrix:
    """Append an n-outcome garbage disposal to every outcome (each row becomes n rows of R/n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return CondMatrix(np.repeat(R.R / n, n, axis=0))


def _check_sic(sic: SicSystem, n: int, what: str):
    if n != sic.n_outcomes:
        raise DimensionError(f"{what} has {n} reference outcomes, SIC for d={sic.d} has {sic.n_outcomes}")


def state_to_prob(rho, sic: SicSystem, tol: float = DENSITY_TOL) -> ProbState:
    """p(i) = tr(rho E_i). Raises ValidationError for an invalid density matrix."""
    m = as_matrix(rho)
    if m.shape != (sic.d, sic.d):
        raise DimensionError(f"rho is {m.shape}, SIC is for d={sic.d}")
    validate_density(m, tol).raise_if_failed("invalid density matrix")
    p = np.real(np.einsum("ikl,lk->i", sic.effects, m))
    # rho is only PSD and unit-trace within tol; land exactly on the simplex
    p = np.clip(p, 0.0, None)
    return ProbState(p / p.sum())


def prob_to_state(p: ProbState, sic: SicSystem) -> np.ndarray:
    """rho = sum_i ((d+1) p(i) - 1/d) Pi_i: unit trace, Hermitian, not necessarily PSD."""
    _check_sic(sic, p.n, "p")
    d = sic.d
    coeffs = (d + 1) * p.p - 1.0 / d
    rho = np.einsum("i,ikl->kl", coeffs, sic.projectors)
    return (rho + rho.conj().T) / 2


def povm_to_cond(effects: Sequence, sic: SicSystem, tol: float = POVM_TOL) -> CondMatrix:
    """R(j|i) = tr(Pi_i D_j). Raises ValidationError for an invalid POVM."""
    mats = np.array([as_matrix(e) for e in effects])
    if mats.shape[1:] != (sic.d, sic.d):
        raise DimensionError(f"POVM elements are {mats.shape[1:]}, SIC is for d={sic.d}")
    validate_povm(list(mats), tol).raise_if_failed("invalid POVM")
    r = np.real(np.einsum("ikl,jlk->ji", sic.projectors, mats))
    r = np.clip(r, 0.0, None)
    return CondMatrix(r / r.sum(axis=0, keepdims=True))


def cond_to_povm(R: CondMatrix, sic: SicSystem) -> List[np.ndarray]:
    """D_j = sum_i R(j|i) ((d+1) E_i - I/d): sums to identity, PSD not guaranteed."""
    _check_sic(sic, R.N, "R")
    d = sic.d
    frame = (d + 1) * sic.effects - np.eye(d) / d
    effects = np.einsum("ji,ikl->jkl", R.R, frame)
    return [(e + e.conj().T) / 2 for e in effects]
