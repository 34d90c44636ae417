"""Symmetric informationally complete reference measurements (Weyl-Heisenberg covariant)."""

from .fiducial import (
    Fiducial,
    builtin_fiducial,
    canonical_gauge,
    find_fiducial,
    frame_potential_error,
    frame_potential_gradient,
    has_builtin_fiducial,
    search_objective,
)
from .system import SicSystem, build_sic, gram_rank, overlap_table, verify_sic
from .weyl_heisenberg import clock_matrix, shift_matrix, wh_displacements

__all__ = [
    "Fiducial",
    "SicSystem",
    "build_sic",
    "builtin_fiducial",
    "canonical_gauge",
    "clock_matrix",
    "find_fiducial",
    "frame_potential_error",
    "frame_potential_gradient",
    "gram_rank",
    "has_builtin_fiducial",
    "overlap_table",
    "search_objective",
    "shift_matrix",
    "verify_sic",
    "wh_displacements",
]
