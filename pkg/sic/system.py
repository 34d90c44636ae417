"""
SIC reference measurement built from a fiducial.

Pi_i = D_i |psi><psi| D_i^dagger, E_i = Pi_i / d. A SIC has
tr(E_i E_j) = (d delta_ij + 1) / (d^2 (d+1)); sic_error records the worst
deviation from that overlap table. Only the fiducial and sic_error are ever
serialised; the operators are recomputed on load.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from operators import ValidationReport, validate_povm
from .fiducial import Fiducial
from .weyl_heisenberg import wh_displacements

GRAM_RANK_CUTOFF = 1e-8


@dataclass(frozen=True)
class SicSystem:
    d: int
    fiducial: Fiducial
    displacements: np.ndarray
    projectors: np.ndarray
    effects: np.ndarray
    sic_error: float

    @property
    def n_outcomes(self) -> int:
        return self.d * self.d

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.d, dtype=np.complex128)

    def to_dict(self) -> Dict:
        return {"fiducial": self.fiducial.to_dict(), "sic_error": self.sic_error}

    @classmethod
    def from_dict(cls, data: Dict) -> "SicSystem":
        """Accept either a SicSystem export or a bare fiducial file."""
        from utils import require_field
        fid_data = require_field(data, "fiducial") if "fiducial" in data else data
        return build_sic(Fiducial.from_dict(fid_data))


def overlap_table(effects: np.ndarray) -> np.ndarray:
    """tr(E_i E_j) for all i, j (real N x N)."""
    # tr(A B) = sum_kl A_kl B_lk
    return np.real(np.einsum("ikl,jlk->ij", effects, effects))


def _sic_targets(d: int) -> np.ndarray:
    n = d * d
    return (d * np.eye(n) + 1.0) / (d * d * (d + 1))


def build_sic(fiducial: Fiducial) -> SicSystem:
    d = fiducial.d
    displacements = wh_displacements(d)
    orbit = displacements @ fiducial.amplitudes            # (N, d) rows D_i psi
    projectors = orbit[:, :, None] * orbit.conj()[:, None, :]
    effects = projectors / d
    sic_error = float(np.max(np.abs(overlap_table(effects) - _sic_targets(d))))
    for arr in (displacements, projectors, effects):
        arr.setflags(write=False)
    return SicSystem(d=d, fiducial=fiducial, displacements=displacements,
                     projectors=projectors, effects=effects, sic_error=sic_error)


def verify_sic(sic: SicSystem, tol: float = 1e-9) -> ValidationReport:
    """ok iff every overlap tr(E_i E_j) is within tol of the SIC value and the effects form a POVM."""
    dev = np.abs(overlap_table(sic.effects) - _sic_targets(sic.d))
    worst = float(dev.max())
    i, j = np.unravel_index(int(dev.argmax()), dev.shape)
    overlaps = ValidationReport.from_violations(
        [(worst, f"overlap tr(E_{i} E_{j}) deviates from the SIC value by {worst:.3g}")], tol)
    return overlaps.merge(validate_povm(list(sic.effects), tol))


def gram_rank(sic: SicSystem, cutoff: float = GRAM_RANK_CUTOFF) -> int:
    """Numerical rank of the projector Gram matrix tr(Pi_i Pi_j)."""
    gram = overlap_table(sic.projectors)
    return int(np.sum(np.linalg.svd(gram, compute_uv=False) > cutoff))
