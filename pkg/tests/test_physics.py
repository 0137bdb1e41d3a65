import numpy as np
import pytest
from hypothesis import given

from conftest import prim_states, random_prims
from helpers import flux_jacobian_fd
from wenoct.physics import (
    GAMMA,
    InvalidStateError,
    PositivityError,
    cons_to_prim,
    eigensystem,
    flux,
    powell_source,
    prim_to_cons,
    wave_speeds,
)
from wenoct.problems import ROTATED_TUBE

AXES = np.eye(3)


def test_energy_of_tube_left_state():
    q = prim_to_cons(np.array(ROTATED_TUBE[0], dtype=float))
    assert q[4] == pytest.approx(2.36125, abs=1e-14)
    assert q[1] == pytest.approx(-0.4)


def test_zero_velocity_state():
    w = np.array([2.0, 0, 0, 0, 1.0, 0, 0, 0])
    q = prim_to_cons(w)
    assert np.allclose(q[1:4], 0)
    assert q[4] == pytest.approx(1.5)


@given(prim_states())
def test_round_trip(w):
    back = cons_to_prim(prim_to_cons(w))
    assert np.allclose(back, w, rtol=1e-12, atol=1e-12 * np.abs(w).max())


def test_round_trip_batch(rng):
    w = random_prims(rng, 100)
    back = cons_to_prim(prim_to_cons(w))
    rel = np.abs(back - w) / np.maximum(np.abs(w), 1e-3)
    assert rel.max() < 1e-13


def test_nonpositive_density_rejected():
    q = prim_to_cons(np.array([1.0, 0, 0, 0, 1, 0, 0, 0]))
    q[0] = 0.0
    with pytest.raises(InvalidStateError):
        cons_to_prim(q)


def test_negative_pressure_reports_location():
    w = np.tile(np.array([1.0, 0, 0, 0, 1, 0, 0, 0])[:, None], (1, 5))
    q = prim_to_cons(w)
    q[5, 3] = 2.0  # magnetic energy now exceeds the total
    with pytest.raises(PositivityError) as info:
        cons_to_prim(q)
    assert info.value.location == (3,)


def test_flux_static_field():
    q = prim_to_cons(np.array([1.0, 0, 0, 0, 1.0, 0, 0, 0]))
    assert np.allclose(flux(q, 0), [0, 1.0, 0, 0, 0, 0, 0, 0])


@pytest.mark.parametrize("axis", [0, 1, 2])
def test_flux_normal_field_component_vanishes(axis, rng):
    q = prim_to_cons(random_prims(rng, 20))
    assert np.all(flux(q, axis)[5 + axis] == 0)


def test_flux_matches_jacobian_vector_product(rng):
    w = random_prims(rng, 1)[:, 0]
    q = prim_to_cons(w)
    v = rng.normal(size=8)
    h = 1e-6
    fd = (flux(q + h * v, 1) - flux(q - h * v, 1)) / (2 * h)
    jv = flux_jacobian_fd(q, 1, h=1e-7) @ v
    assert np.allclose(fd, jv, rtol=1e-6, atol=1e-6 * np.abs(fd).max())


def test_speeds_without_field():
    w = np.array([1.0, 0, 0, 0, 1.0, 0, 0, 0])
    s = wave_speeds(w, [1, 0, 0])
    assert s.ca == 0 and s.cs == 0
    assert s.cf == pytest.approx(np.sqrt(5 / 3), rel=1e-14)
    assert s.a == pytest.approx(1.290994, abs=1e-6)


@given(prim_states())
def test_speeds_ordered(w):
    for n in AXES:
        lam = wave_speeds(w, n).lam
        assert np.all(np.diff(lam) >= -1e-12 * (1 + np.abs(lam).max()))


@given(prim_states())
def test_speeds_reverse_under_direction_flip(w):
    n = np.array([0.6, 0.0, 0.8])
    fwd = wave_speeds(w, n).lam
    back = wave_speeds(w, -n).lam
    assert np.allclose(fwd, -back[::-1], atol=1e-12)


@given(prim_states())
def test_left_right_inverse(w):
    for axis in range(3):
        es = eigensystem(w, axis)
        err = np.abs(es.L @ es.R - np.eye(8)).max()
        assert err <= 1e-11 * max(1.0, np.abs(es.R).max() * np.abs(es.L).max())


@pytest.mark.parametrize("axis", [0, 1, 2])
def test_eigenvalues_match_speeds(axis, rng):
    w = random_prims(rng, 50)
    es = eigensystem(w, axis)
    assert np.allclose(es.lam, wave_speeds(w, AXES[axis]).lam.T, atol=1e-12)


@pytest.mark.parametrize("axis", [0, 1, 2])
def test_eight_wave_jacobian(axis, rng):
    """R diag(lam) L reproduces the flux Jacobian plus the divergence-wave column."""
    w = random_prims(rng, 25)
    for k in range(w.shape[1]):
        es = eigensystem(w[:, k], axis)
        a = es.R @ np.diag(es.lam) @ es.L
        jac = flux_jacobian_fd(prim_to_cons(w[:, k]), axis)
        jac[:, 5 + axis] += powell_source(w[:, k], axis)
        assert np.abs(a - jac).max() <= 1e-6 * np.abs(jac).max()


def test_eigensystem_with_vanishing_transverse_field():
    w = np.array([1.0, 0.1, -0.2, 0.3, 0.6, 1.0, 1e-14, 1e-14])
    es = eigensystem(w, 0)
    assert np.all(np.isfinite(es.R)) and np.all(np.isfinite(es.L))
    assert np.abs(es.L @ es.R - np.eye(8)).max() < 1e-11


@pytest.mark.parametrize(
    "w",
    [
        [1.0, 0, 0, 0, 1.0, 0, 0, 0],  # no field at all
        [1.0, 0, 0, 0, 0.6, 0.0, 1.0, 0.0],  # purely transverse field
        [1.0, 0, 0, 0, 0.6, 1.0, 0.0, 0.0],  # a = c_a triple point
    ],
)
def test_degenerate_states_invertible(w):
    es = eigensystem(np.array(w, dtype=float), 0)
    assert np.abs(es.L @ es.R - np.eye(8)).max() < 1e-11
