"""
Inner-product geometry of a probabilistic state space.

Every pair of valid states obeys L <= (p1, p2) <= U. With the uniform vector
iota = 1/N as origin, the shifted quantities L' = 1/N - L and U' = U - 1/N
control everything else:

* a mutually-maximally-distant (MMD) set has at most 1 + U'/L' members
* the basis states p_k = (1 - N L) delta_k + L have norm^2
  U = 1 + L (N-1)(N L - 2) when they sit on the out-ball
* the in-ball (largest ball in the simplex) has radius 1/sqrt(N(N-1)), the
  out-ball radius sqrt(U'), and the two are mutually polar:
  r_in * r_out = L'

Quantum theory (N = d^2) fixes L = 1/(d^2+d) and U = 2L; a classical simplex
has N = d, L = 0, U = 1. ``derive_bounds`` recovers both from the MMD and
maximal-norm identities.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Dict, List, Tuple

import numpy as np

from errors import DimensionError
from representation import ProbState

FLOOR_EPS = 1e-9


@dataclass(frozen=True)
class QplexGeometry:
    d: int
    N: int
    L: float
    U: float
    Lprime: float
    Uprime: float
    r_in: float
    r_out: float

    @property
    def mmd_bound(self) -> int:
        return mmd_bound(self.N, self.L, self.U)

    def to_dict(self) -> Dict:
        out = asdict(self)
        out["mmd_bound"] = self.mmd_bound
        return out


def _check_d(d: int) -> int:
    if int(d) != d or d < 2:
        raise DimensionError(f"dimension must be an integer >= 2, got {d}")
    return int(d)


def _geometry(d: int, N: int, L: float, U: float) -> QplexGeometry:
    r_in = 1.0 / math.sqrt(N * (N - 1))
    return QplexGeometry(d=d, N=N, L=L, U=U, Lprime=1.0 / N - L, Uprime=U - 1.0 / N,
                         r_in=r_in, r_out=math.sqrt(U - 1.0 / N))


def quantum_bounds(d: int) -> QplexGeometry:
    """N = d^2, L = 1/(d(d+1)), U = 2L."""
    d = _check_d(d)
    L = 1.0 / (d * d + d)
    return _geometry(d, d * d, L, 2 * L)


def classical_bounds(d: int) -> QplexGeometry:
    """The probability simplex: N = d, L = 0, U = 1."""
    d = _check_d(d)
    return _geometry(d, d, 0.0, 1.0)


def u_from_nl(N: int, L: float) -> float:
    """Squared norm of the basis states: U = 1 + L (N-1)(N L - 2)."""
    if N < 1:
        raise DimensionError("N must be positive")
    if not 0.0 <= L <= 1.0 / N:
        raise ValueError(f"L={L} outside [0, 1/N] for N={N}")
    return 1.0 + L * (N - 1) * (N * L - 2)


def geometry_from(N: int, L: float, d: int) -> QplexGeometry:
    """Geometry with U fixed by the maximal-norm identity."""
    return _geometry(d, N, L, u_from_nl(N, L))


def derive_bounds(d: int, N: int) -> QplexGeometry:
    """Solve U = (1-d) L + d/N together with U = 1 + L(N-1)(NL-2) for L in [0, 1/N).

    Substituting gives N(N-1) L^2 + (d + 1 - 2N) L + (1 - d/N) = 0; the root
    at L = 1/N is the degenerate one-point state space.
    """
    d = _check_d(d)
    if N < d:
        raise DimensionError(f"N={N} cannot be smaller than d={d}")
    a = N * (N - 1)
    b = d + 1 - 2 * N
    c = 1.0 - d / N
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError(f"no real bounds for d={d}, N={N}")
    roots = sorted(((-b - math.sqrt(disc)) / (2 * a), (-b + math.sqrt(disc)) / (2 * a)))
    admissible = [r for r in roots if -FLOOR_EPS <= r < 1.0 / N - FLOOR_EPS]
    if not admissible:
        raise ValueError(f"no admissible lower bound for d={d}, N={N}")
    L = max(0.0, admissible[0])
    return _geometry(d, N, L, (1 - d) * L + d / N)


def mmd_bound(N: int, L: float, U: float) -> int:
    """Largest possible MMD set: floor(1 + U'/L')."""
    Lp = 1.0 / N - L
    if abs(Lp) <= 1e-15:
        raise ValueError("degenerate geometry: L = 1/N")
    if not L < 1.0 / N < U:
        raise ValueError(f"need L < 1/N < U, got L={L}, 1/N={1.0 / N}, U={U}")
    # The ratio is an integer in every exact geometry; absorb round-off
    return int(math.floor(1.0 + (U - 1.0 / N) / Lp + FLOOR_EPS))


def basis_states(N: int, L: float) -> List[ProbState]:
    """p_k(i) = (1 - N L) delta_ik + L."""
    if not 0.0 <= L <= 1.0 / N:
        raise ValueError(f"L={L} outside [0, 1/N] for N={N}")
    return [ProbState(col) for col in ((1 - N * L) * np.eye(N) + L).T]


def ball_radii(d: int) -> Tuple[float, float]:
    """(r_in, r_out) for the quantum geometry in dimension d."""
    geom = quantum_bounds(d)
    return geom.r_in, geom.r_out
