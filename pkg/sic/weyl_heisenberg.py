"""Weyl-Heisenberg displacement operators D_(a,b) = tau^(ab) X^a Z^b."""

from __future__ import annotations

import numpy as np

from errors import DimensionError

MIN_DIMENSION = 2
MAX_DIMENSION = 16


def check_dimension(d: int) -> int:
    if int(d) != d or not MIN_DIMENSION <= d <= MAX_DIMENSION:
        raise DimensionError(
            f"dimension {d} outside supported range {MIN_DIMENSION}..{MAX_DIMENSION}")
    return int(d)


def shift_matrix(d: int) -> np.ndarray:
    """Cyclic shift X|k> = |k+1 mod d>."""
    x = np.zeros((d, d), dtype=np.complex128)
    x[(np.arange(d) + 1) % d, np.arange(d)] = 1.0
    return x


def clock_matrix(d: int) -> np.ndarray:
    """Z = diag(omega^k), omega = exp(2 pi i / d)."""
    omega = np.exp(2j * np.pi / d)
    return np.diag(omega ** np.arange(d))


def wh_displacements(d: int) -> np.ndarray:
    """All N = d^2 displacement operators, shape (N, d, d).

    Index a*d + b holds D_(a,b) = tau^(ab) X^a Z^b with tau = -exp(i pi/d),
    so index 0 is the identity.
    """
    d = check_dimension(d)
    tau = -np.exp(1j * np.pi / d)
    x, z = shift_matrix(d), clock_matrix(d)
    x_pows = [np.linalg.matrix_power(x, a) for a in range(d)]
    z_pows = [np.linalg.matrix_power(z, b) for b in range(d)]

    out = np.empty((d * d, d, d), dtype=np.complex128)
    for a in range(d):
        for b in range(d):
            out[a * d + b] = tau ** (a * b) * (x_pows[a] @ z_pows[b])
    return out
