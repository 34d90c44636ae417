"""Qplex geometry: bounds, MMD sets, balls, membership and linear extension."""

import numpy as np
import pytest

from errors import DimensionError, InconsistencyError, SpanError
from operators import random_density, random_pure_state
from qplex import (
    ball_radii,
    basis_states,
    classical_bounds,
    derive_bounds,
    effect_from_state,
    effect_operator,
    find_mmd,
    geometry_from,
    in_ball,
    in_out_ball,
    in_polar,
    linear_extension,
    mmd_bound,
    quantum_bounds,
    u_from_nl,
    valid_effect,
    valid_state,
)
from representation import ProbState, prob_to_state, reference_states, state_to_prob


# ----------------------------------------------------------------------
# Bounds
# ----------------------------------------------------------------------
@pytest.mark.parametrize("d", range(2, 9))
def test_quantum_bounds_closed_form(d):
    geom = quantum_bounds(d)
    assert geom.N == d * d
    assert geom.L == 1 / (d * d + d)
    assert geom.U == 2 * geom.L
    assert geom.mmd_bound == d
    r_in, r_out = ball_radii(d)
    assert r_in * r_out == pytest.approx(1 / (d * d * (d + 1)), abs=1e-12)
    assert r_in * r_out == pytest.approx(geom.Lprime, abs=1e-12)


@pytest.mark.parametrize("d", range(2, 9))
def test_derive_bounds_recovers_quantum_and_classical(d):
    quantum = derive_bounds(d, d * d)
    assert quantum.L == pytest.approx(1 / (d * (d + 1)), abs=1e-12)
    assert quantum.U == pytest.approx(2 / (d * (d + 1)), abs=1e-12)
    classical = derive_bounds(d, d)
    assert classical.L == pytest.approx(0.0, abs=1e-12)
    assert classical.U == pytest.approx(1.0, abs=1e-12)


def test_classical_bounds():
    geom = classical_bounds(3)
    assert (geom.N, geom.L, geom.U) == (3, 0.0, 1.0)
    assert geom.mmd_bound == 3


def test_maximal_norm_identity():
    for d in (2, 3, 4):
        geom = quantum_bounds(d)
        assert u_from_nl(geom.N, geom.L) == pytest.approx(geom.U, abs=1e-15)
        assert geometry_from(geom.N, geom.L, d).U == pytest.approx(geom.U, abs=1e-15)
        for p in basis_states(geom.N, geom.L):
            assert p.p @ p.p == pytest.approx(geom.U, abs=1e-15)


def test_mmd_bound_rejects_degenerate_geometry():
    with pytest.raises(ValueError):
        mmd_bound(4, 0.25, 0.5)
    with pytest.raises(ValueError):
        mmd_bound(4, 0.1, 0.2)
    with pytest.raises(DimensionError):
        quantum_bounds(1)


def test_geometry_export():
    out = quantum_bounds(3).to_dict()
    assert out["L"] == 1 / 12
    assert out["mmd_bound"] == 3


# ----------------------------------------------------------------------
# Inner products of valid states
# ----------------------------------------------------------------------
def _pure_images(sic, n, rng):
    """SIC probabilities of n random pure states: p(i) = |<D_i psi_0|psi>|^2 / d."""
    d = sic.d
    psi = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    psi /= np.linalg.norm(psi, axis=1, keepdims=True)
    orbit = sic.displacements @ sic.fiducial.amplitudes
    return np.abs(psi @ orbit.conj().T) ** 2 / d


@pytest.mark.parametrize("d", [2, 3])
def test_inner_products_stay_within_bounds(d, sics, rng):
    geom = quantum_bounds(d)
    a = _pure_images(sics[d], 100_000, rng)
    b = _pure_images(sics[d], 100_000, rng)
    overlaps = np.einsum("ni,ni->n", a, b)
    assert overlaps.min() >= geom.L - 1e-9
    assert overlaps.max() <= geom.U + 1e-9
    assert np.allclose(np.einsum("ni,ni->n", a, a), geom.U, atol=1e-10)


@pytest.mark.parametrize("d", [2, 3])
def test_orthogonal_pure_states_saturate_lower_bound(d, sics, rng):
    geom = quantum_bounds(d)
    for _ in range(20):
        u = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))[0]
        p = [state_to_prob(np.outer(u[:, k], u[:, k].conj()), sics[d]) for k in range(2)]
        assert p[0].p @ p[1].p == pytest.approx(geom.L, abs=1e-10)


# ----------------------------------------------------------------------
# MMD
# ----------------------------------------------------------------------
@pytest.mark.parametrize("d", [2, 3])
def test_mmd_of_basis_images(d, sics, rng):
    sic = sics[d]
    basis = [state_to_prob(np.diag(row), sic) for row in np.eye(d)]
    mixed = [state_to_prob(random_density(d, rng), sic) for _ in range(50)]
    result = find_mmd(mixed[:25] + basis + mixed[25:], quantum_bounds(d))
    assert result.certified
    assert result.size == d
    assert result.indices == tuple(range(25, 25 + d))


def test_mmd_of_simplex_vertices():
    geom = classical_bounds(4)
    result = find_mmd(basis_states(geom.N, geom.L), geom)
    assert result.size == 4 and result.certified


def test_mmd_greedy_beyond_cutoff(sic_d2, rng):
    geom = quantum_bounds(2)
    pure = [state_to_prob(random_pure_state(2, rng), sic_d2) for _ in range(25)]
    basis = [state_to_prob(np.diag(row), sic_d2) for row in np.eye(2)]
    result = find_mmd(pure + basis, geom)
    assert not result.certified
    assert 1 <= result.size <= geom.mmd_bound
    vecs = np.array([(pure + basis)[k].p for k in result.indices])
    gram = vecs @ vecs.T
    off = gram[~np.eye(result.size, dtype=bool)]
    assert np.all(np.abs(off - geom.L) <= 1e-9)


def test_mmd_dimension_mismatch():
    with pytest.raises(DimensionError):
        find_mmd([ProbState([0.5, 0.5])], quantum_bounds(2))


# ----------------------------------------------------------------------
# Membership
# ----------------------------------------------------------------------
@pytest.mark.parametrize("d", [2, 3, 4])
def test_reference_states_valid_vertices_not(d, sics):
    sic = sics[d]
    assert all(valid_state(e, sic).ok for e in reference_states(d))
    for vertex in np.eye(d * d):
        assert not valid_state(ProbState(vertex), sic).ok


def test_balls_and_polarity(sic_d2):
    geom = quantum_bounds(2)
    uniform = np.full(4, 0.25)
    vertex = np.array([1.0, 0.0, 0.0, 0.0])
    e0 = reference_states(2)[0].p
    assert in_ball(uniform, geom) and in_out_ball(uniform, geom)
    assert in_out_ball(e0, geom)
    # For a qubit the two balls coincide (the Bloch ball)
    assert in_ball(e0, geom)
    assert not in_ball(reference_states(3)[0].p, quantum_bounds(3))
    assert not in_out_ball(vertex, geom)

    refs = reference_states(2)
    assert in_polar(e0, refs, geom.L)
    vertices = [ProbState(v) for v in np.eye(4)[1:]]
    assert not in_polar(vertex, vertices, geom.L)
    with pytest.raises(ValueError):
        in_polar([0.5, 0.6, 0.0, 0.0], refs, geom.L)


def test_self_duality(sics, rng):
    for d in (2, 3, 4):
        sic = sics[d]
        rho = random_density(d, rng)
        p = state_to_prob(rho, sic)
        r = effect_from_state(p, d)
        assert r.max() <= 1.0 + 1e-12
        assert valid_effect(r, sic).ok
        assert np.allclose(effect_operator(r, sic), rho, atol=1e-10)
        assert np.allclose(prob_to_state(p, sic), rho, atol=1e-10)


def test_valid_effect(sic_d2):
    assert valid_effect(np.full(4, 0.5), sic_d2).ok
    assert not valid_effect(np.array([1.0, 0.0, 0.0, 0.0]), sic_d2).ok
    with pytest.raises(ValueError):
        valid_effect(np.array([1.5, 0.0, 0.0, 0.0]), sic_d2)


# ----------------------------------------------------------------------
# Linear extension
# ----------------------------------------------------------------------
def test_linear_extension_recovers_functional(rng):
    for d in (2, 3):
        w = rng.normal(size=d * d)
        samples = [(e.p, float(w @ e.p)) for e in reference_states(d)]
        ext = linear_extension(samples)
        assert ext.max_residual <= 1e-12
        assert np.allclose(ext.w, w, atol=1e-10)
        v = rng.dirichlet(np.ones(d * d))
        assert ext(v) == pytest.approx(w @ v, abs=1e-10)


def test_linear_extension_errors(rng):
    refs = [e.p for e in reference_states(2)]
    with pytest.raises(SpanError) as exc:
        linear_extension([(v, 1.0) for v in refs[:3]])
    assert exc.value.rank == 3
    samples = [(v, float(v @ v)) for v in refs] + [(np.full(4, 0.25), 0.0)]
    with pytest.raises(InconsistencyError) as exc:
        linear_extension(samples)
    assert exc.value.residual > 1e-10
    with pytest.raises(SpanError):
        linear_extension([])
