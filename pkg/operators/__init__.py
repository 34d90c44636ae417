"""Dense complex-matrix checks: trace pairing, positivity, density and POVM validation."""

from .linalg import (
    ValidationReport,
    as_matrix,
    check_psd,
    check_unitary,
    eigenvalues,
    hermitian_deviation,
    is_hermitian,
    min_eigenvalue,
    random_density,
    random_povm,
    random_pure_state,
    trace_inner_product,
    validate_density,
    validate_povm,
)

__all__ = [
    "ValidationReport",
    "as_matrix",
    "check_psd",
    "check_unitary",
    "eigenvalues",
    "hermitian_deviation",
    "is_hermitian",
    "min_eigenvalue",
    "random_density",
    "random_povm",
    "random_pure_state",
    "trace_inner_product",
    "validate_density",
    "validate_povm",
]
