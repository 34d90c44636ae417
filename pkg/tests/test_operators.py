"""Dense matrix layer: trace pairing, positivity, density and POVM checks."""

import numpy as np
import pytest

from errors import DimensionError, ValidationError
from operators import (
    as_matrix,
    check_psd,
    check_unitary,
    is_hermitian,
    random_density,
    random_povm,
    random_pure_state,
    trace_inner_product,
    validate_density,
    validate_povm,
)
from sic import wh_displacements


def test_trace_inner_product_of_maximally_mixed_qubit():
    half = np.eye(2) / 2
    assert trace_inner_product(half, half) == pytest.approx(0.5, abs=1e-15)


def test_trace_inner_product_matches_trace_of_product(rng):
    a, b = random_density(3, rng), random_density(3, rng)
    assert trace_inner_product(a, b) == pytest.approx(np.trace(a @ b).real, abs=1e-14)


def _random_hermitian(d, rng):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (g + g.conj().T) / 2


def test_trace_inner_product_identities():
    assert trace_inner_product(np.eye(2), np.eye(2)) == 2.0
    projector = np.diag([1.0, 0.0])
    assert trace_inner_product(projector, projector) == 1.0
    assert trace_inner_product(projector, np.diag([0.0, 1.0])) == 0.0


def test_trace_inner_product_is_symmetric_and_bilinear(rng):
    for d in (2, 3, 5):
        for _ in range(20):
            a, b, c = (_random_hermitian(d, rng) for _ in range(3))
            s, t = rng.normal(size=2)
            assert trace_inner_product(a, b) == pytest.approx(trace_inner_product(b, a), abs=1e-12)
            lhs = trace_inner_product(s * a + t * b, c)
            rhs = s * trace_inner_product(a, c) + t * trace_inner_product(b, c)
            assert lhs == pytest.approx(rhs, abs=1e-10)


def test_trace_inner_product_size_mismatch():
    with pytest.raises(DimensionError):
        trace_inner_product(np.eye(2), np.eye(3))
    with pytest.raises(DimensionError):
        trace_inner_product(np.ones((2, 3)), np.ones((2, 3)))


def test_as_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        as_matrix([[1.0, np.nan], [0.0, 1.0]])
    with pytest.raises(DimensionError):
        as_matrix(np.eye(33))
    with pytest.raises(DimensionError):
        as_matrix([1.0, 2.0])


def test_check_psd_reports_negative_eigenvalue():
    report = check_psd(np.diag([1.0, -0.1]))
    assert not report.ok
    assert report.max_violation == pytest.approx(0.1)
    assert check_psd(np.diag([1.0, 0.0])).ok


def test_check_psd_is_unitarily_invariant(rng):
    assert check_psd(np.diag([1.0, -0.5])).max_violation == pytest.approx(0.5)
    for d in (2, 3, 4):
        eigs = np.linspace(-0.3, 1.0, d)
        g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        u, _ = np.linalg.qr(g)
        a = np.diag(eigs)
        rotated = u @ a @ u.conj().T
        rotated = (rotated + rotated.conj().T) / 2
        plain, turned = check_psd(a), check_psd(rotated)
        assert not plain.ok and not turned.ok
        assert turned.max_violation == pytest.approx(plain.max_violation, abs=1e-12)
        assert check_psd(u @ np.diag(eigs + 0.3) @ u.conj().T).ok


def test_check_psd_requires_hermitian():
    with pytest.raises(ValidationError):
        check_psd(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_validate_density():
    assert validate_density(np.eye(3) / 3).ok
    report = validate_density(np.eye(2))
    assert not report.ok
    assert report.max_violation == pytest.approx(1.0)
    assert any("trace" in m for m in report.messages)


def test_random_states_are_valid(rng):
    for d in (2, 3, 4):
        assert validate_density(random_density(d, rng)).ok
        pure = random_pure_state(d, rng)
        assert validate_density(pure).ok
        assert np.trace(pure @ pure).real == pytest.approx(1.0, abs=1e-12)


def test_validate_povm(rng):
    assert validate_povm(random_povm(3, 4, rng)).ok
    assert validate_povm([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]).ok
    assert not validate_povm([np.diag([1.0, 0.0]), np.diag([0.0, 0.5])]).ok


def test_validate_povm_edge_cases():
    with pytest.raises(ValueError):
        validate_povm([])
    with pytest.raises(DimensionError):
        validate_povm([np.eye(2), np.eye(3)])


def test_displacements_are_unitary():
    for op in wh_displacements(3):
        assert check_unitary(op).ok
    assert not check_unitary(2 * np.eye(2)).ok


def test_is_hermitian():
    assert is_hermitian(np.array([[1, 1j], [-1j, 2]]))
    assert not is_hermitian(np.array([[1, 1j], [1j, 2]]))
