"""
Convex geometry of the probabilistic state space (the qplex).

Inner-product bounds, MMD sets, polarity and ball radii, exact physical
membership through operator reconstruction, and the linear-extension
certifier for additive functions.
"""

from .extension import LinearExtension, linear_extension
from .geometry import (
    QplexGeometry,
    ball_radii,
    basis_states,
    classical_bounds,
    derive_bounds,
    geometry_from,
    mmd_bound,
    quantum_bounds,
    u_from_nl,
)
from .membership import (
    effect_from_state,
    effect_operator,
    in_ball,
    in_out_ball,
    in_polar,
    valid_effect,
    valid_state,
)
from .mmd import MmdResult, find_mmd

__all__ = [
    "LinearExtension",
    "MmdResult",
    "QplexGeometry",
    "ball_radii",
    "basis_states",
    "classical_bounds",
    "derive_bounds",
    "effect_from_state",
    "effect_operator",
    "find_mmd",
    "geometry_from",
    "in_ball",
    "in_out_ball",
    "in_polar",
    "linear_extension",
    "mmd_bound",
    "quantum_bounds",
    "u_from_nl",
    "valid_effect",
    "valid_state",
]
