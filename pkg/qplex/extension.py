"""
Constructive linear extension of an additive function.

Given samples (v_x, f(v_x)) on a spanning set, an additive f extends to a
unique linear functional w with f(v) = (w, v). The least-squares solution
is computed and then certified by its largest residual: truly additive data
reproduces every sample to round-off, anything else is reported with the
worst offending sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from errors import DimensionError, InconsistencyError, SpanError

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class LinearExtension:
    w: np.ndarray
    max_residual: float
    worst_index: int

    def __call__(self, v) -> float:
        return float(np.dot(self.w, np.asarray(v, dtype=float)))

    def to_dict(self) -> dict:
        return {"w": self.w.tolist(), "max_residual": self.max_residual,
                "worst_index": self.worst_index}


def linear_extension(samples: Sequence[Tuple[Sequence[float], float]],
                     tol: float = DEFAULT_TOL) -> LinearExtension:
    if not samples:
        raise SpanError("no samples given", rank=0)
    vectors = np.array([np.asarray(v, dtype=float) for v, _ in samples])
    values = np.array([float(y) for _, y in samples])
    if vectors.ndim != 2:
        raise DimensionError("sample vectors must all have the same length")
    n = vectors.shape[1]

    rank = int(np.linalg.matrix_rank(vectors))
    if rank < n:
        raise SpanError(f"samples span only {rank} of {n} dimensions", rank=rank)

    w, *_ = np.linalg.lstsq(vectors, values, rcond=None)
    residuals = np.abs(vectors @ w - values)
    worst = int(residuals.argmax())
    if residuals[worst] > tol:
        raise InconsistencyError(
            f"samples are not linear: sample {worst} misses by {residuals[worst]:.3g} > {tol:g}",
            worst_index=worst, residual=float(residuals[worst]))
    return LinearExtension(w=w, max_residual=float(residuals[worst]), worst_index=worst)
