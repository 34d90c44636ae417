"""Seeded Monte-Carlo simulation of Experiments One and Two."""

from .engine import (
    DEFAULT_GENERATOR,
    CountTable,
    MarginReport,
    RunConfig,
    empirical_compare,
    irreducible_margin,
    outcome_labels,
    pair_labels,
    sample_categorical,
    sample_experiment_one,
    sample_experiment_two,
)

__all__ = [
    "DEFAULT_GENERATOR",
    "CountTable",
    "MarginReport",
    "RunConfig",
    "empirical_compare",
    "irreducible_margin",
    "outcome_labels",
    "pair_labels",
    "sample_categorical",
    "sample_experiment_one",
    "sample_experiment_two",
]
