"""
SIC fiducial vectors and their numerical search.

A unit vector psi generates a SIC under the Weyl-Heisenberg group exactly
when every non-trivial displaced overlap has |<psi|D_p psi>|^2 = 1/(d+1).
The frame-potential error below is the sum of squared deviations from that
value; it is zero precisely on SIC fiducials.

Search method: seeded random complex starting vectors, each polished by
BFGS (scipy.optimize.minimize) on the 2d real parameters (real and
imaginary parts) with an analytic gradient. The objective is evaluated on
the normalised vector, and the iterate is re-normalised between polishing
rounds. Restarts are independent, can run on a thread pool, and are merged
by (error, restart index) so the winner never depends on scheduling.

Usage:
    python cli.py sic find -d 3 --seed 1 --restarts 32 -o fid3.json
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from errors import ConvergenceError, DimensionError
from .weyl_heisenberg import check_dimension, wh_displacements

logger = logging.getLogger(__name__)

NORM_TOL = 1e-12
GAUGE_EPS = 1e-12
DEFAULT_TOL = 1e-10
DEFAULT_RESTARTS = 16
POLISH_ROUNDS = 4
POLISH_TARGET = 1e-26
MAX_ITER = 2000


@dataclass(frozen=True)
class Fiducial:
    """Unit vector in C^d, first non-zero amplitude real and positive."""
    d: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape != (self.d,):
            raise DimensionError(f"fiducial for d={self.d} needs {self.d} amplitudes, got {amps.size}")
        norm_err = abs(float(np.vdot(amps, amps).real) - 1.0)
        if norm_err > NORM_TOL:
            raise ValueError(f"fiducial is not unit norm (|norm^2 - 1| = {norm_err:.3g})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "Fiducial":
        """Normalise and fix the global phase of an arbitrary non-zero vector."""
        amps = canonical_gauge(amplitudes)
        return cls(d=amps.size, amplitudes=amps)

    def to_dict(self) -> Dict:
        return {"d": self.d,
                "re": self.amplitudes.real.tolist(),
                "im": self.amplitudes.imag.tolist()}

    @classmethod
    def from_dict(cls, data: Dict) -> "Fiducial":
        # Imported lazily: utils pulls in every package's file formats
        from utils import require_int, require_vector
        d = require_int(data, "d")
        re = require_vector(data, "re", length=d)
        im = require_vector(data, "im", length=d)
        return cls.from_amplitudes(np.asarray(re) + 1j * np.asarray(im))


def canonical_gauge(amplitudes) -> np.ndarray:
    amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
    norm = np.linalg.norm(amps)
    if norm == 0 or not np.isfinite(norm):
        raise ValueError("cannot normalise a zero or non-finite vector")
    amps = amps / norm
    first = np.flatnonzero(np.abs(amps) > GAUGE_EPS)[0]
    phase = amps[first] / abs(amps[first])
    amps = amps / phase
    amps[first] = abs(amps[first])
    return amps


# ----------------------------------------------------------------------
# Built-in closed-form fiducials
# ----------------------------------------------------------------------
def _qubit_fiducial() -> np.ndarray:
    # Bloch vector (1, 1, 1)/sqrt(3): the tetrahedral qubit SIC
    a = np.sqrt((3 + np.sqrt(3)) / 6)
    b = np.sqrt((3 - np.sqrt(3)) / 6)
    return np.array([a, b * np.exp(1j * np.pi / 4)])


def _qutrit_fiducial() -> np.ndarray:
    return np.array([0.0, 1.0, -1.0]) / np.sqrt(2)


_BUILTIN = {2: _qubit_fiducial, 3: _qutrit_fiducial}


def builtin_fiducial(d: int) -> Fiducial:
    """Closed-form SIC fiducial for d = 2 or 3."""
    if d not in _BUILTIN:
        raise DimensionError(f"no built-in fiducial for d={d}; use find_fiducial")
    return Fiducial.from_amplitudes(_BUILTIN[d]())


def has_builtin_fiducial(d: int) -> bool:
    return d in _BUILTIN


# ----------------------------------------------------------------------
# Objective
# ----------------------------------------------------------------------
def _overlaps(psi: np.ndarray, displacements: np.ndarray) -> np.ndarray:
    """<psi|D_p psi> for every p != 0 (psi need not be normalised)."""
    d_psi = displacements[1:] @ psi
    return d_psi @ psi.conj()


def frame_potential_error(fiducial: Fiducial) -> float:
    """Sum over p != 0 of (|<psi|D_p psi>|^2 - 1/(d+1))^2."""
    d = fiducial.d
    overlaps = _overlaps(fiducial.amplitudes, wh_displacements(d))
    return float(np.sum((np.abs(overlaps) ** 2 - 1.0 / (d + 1)) ** 2))


def _objective(x: np.ndarray, displacements: np.ndarray, daggers: np.ndarray) -> Tuple[float, np.ndarray]:
    """Frame-potential error of x/|x| and its gradient in the 2d real parameters."""
    d = displacements.shape[1]
    psi = x[:d] + 1j * x[d:]
    n = float(np.vdot(psi, psi).real)
    d_psi = displacements[1:] @ psi
    ddag_psi = daggers[1:] @ psi
    a = d_psi @ psi.conj()
    a2 = np.abs(a) ** 2
    resid = a2 / n ** 2 - 1.0 / (d + 1)
    value = float(np.sum(resid ** 2))

    # Wirtinger derivative with respect to conj(psi)
    g = ((a.conj()[:, None] * d_psi + a[:, None] * ddag_psi) / n ** 2
         - 2 * a2[:, None] * psi[None, :] / n ** 3)
    g = np.sum(2 * resid[:, None] * g, axis=0)
    return value, np.concatenate([2 * g.real, 2 * g.imag])


def frame_potential_gradient(x: np.ndarray, d: int) -> np.ndarray:
    """Analytic gradient of the search objective at real parameters x (length 2d)."""
    disp = wh_displacements(d)
    return _objective(np.asarray(x, dtype=float), disp, np.conj(np.transpose(disp, (0, 2, 1))))[1]


def search_objective(x: np.ndarray, d: int) -> float:
    disp = wh_displacements(d)
    return _objective(np.asarray(x, dtype=float), disp, np.conj(np.transpose(disp, (0, 2, 1))))[0]


# ----------------------------------------------------------------------
# Search
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RestartResult:
    index: int
    error: float
    params: np.ndarray
    iterations: int


def _run_restart(index: int, rng: np.random.Generator, displacements: np.ndarray,
                 daggers: np.ndarray) -> RestartResult:
    d = displacements.shape[1]
    x = rng.normal(size=2 * d)
    x /= np.linalg.norm(x)
    error, iterations = np.inf, 0
    for _ in range(POLISH_ROUNDS):
        res = minimize(_objective, x, args=(displacements, daggers), jac=True,
                       method="BFGS", options={"gtol": 1e-14, "maxiter": MAX_ITER})
        iterations += int(res.nit)
        improved = float(res.fun) < error
        x = res.x / np.linalg.norm(res.x)
        error = min(error, float(res.fun))
        # Residuals near 1e-13: overlaps good to round-off, not just to tol
        if error <= POLISH_TARGET or not improved:
            break
    logger.debug("restart %d: error %.3e after %d iterations", index, error, iterations)
    return RestartResult(index=index, error=error, params=x, iterations=iterations)


def find_fiducial(d: int, seed: int, restarts: int = DEFAULT_RESTARTS,
                  tol: float = DEFAULT_TOL, workers: Optional[int] = None) -> Fiducial:
    """Numerically search for a SIC fiducial in dimension d.

    Deterministic for fixed (d, seed, restarts); ``workers`` only changes
    wall-clock time. Raises ConvergenceError carrying the best error when no
    restart reaches tol.
    """
    d = check_dimension(d)
    if restarts < 1:
        raise ValueError("restarts must be >= 1")

    displacements = wh_displacements(d)
    daggers = np.conj(np.transpose(displacements, (0, 2, 1)))
    streams = [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(restarts)]

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_restart, i, rng, displacements, daggers)
                       for i, rng in enumerate(streams)]
            results: List[RestartResult] = [f.result() for f in futures]
    else:
        results = [_run_restart(i, rng, displacements, daggers)
                   for i, rng in enumerate(streams)]

    best = min(results, key=lambda r: (r.error, r.index))
    successes = sum(r.error <= tol for r in results)
    logger.info("d=%d seed=%d: %d/%d restarts reached tol %.1e (best %.3e, restart %d)",
                d, seed, successes, restarts, tol, best.error, best.index)

    if best.error > tol:
        raise ConvergenceError(
            f"no SIC fiducial found for d={d} after {restarts} restarts "
            f"(best frame-potential error {best.error:.3e} > {tol:.1e})",
            best_error=best.error)

    fiducial = Fiducial.from_amplitudes(best.params[:d] + 1j * best.params[d:])
    return fiducial
