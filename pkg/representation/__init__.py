"""Probability representation of states and measurements, and the probabilistic Born rule."""

from .born_rule import born, born_matrix, ltp, ltp_deviation, oracle_probabilities
from .conversions import (
    coarse_grain,
    cond_to_povm,
    double_pass_matrix,
    fine_grain,
    garbage_disposal,
    phi_matrix,
    povm_to_cond,
    prob_to_state,
    reference_matrix,
    reference_states,
    state_to_prob,
)
from .types import CondMatrix, OutcomeDist, ProbState, require_valid, simplex_report

__all__ = [
    "CondMatrix",
    "OutcomeDist",
    "ProbState",
    "born",
    "born_matrix",
    "coarse_grain",
    "cond_to_povm",
    "double_pass_matrix",
    "fine_grain",
    "garbage_disposal",
    "ltp",
    "ltp_deviation",
    "oracle_probabilities",
    "phi_matrix",
    "povm_to_cond",
    "prob_to_state",
    "reference_matrix",
    "reference_states",
    "require_valid",
    "simplex_report",
    "state_to_prob",
]
