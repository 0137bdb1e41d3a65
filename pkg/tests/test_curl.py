import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import observed_orders
from wenoct.curl import ct_correct, curl_2d, curl_3d, curl_vector, d4, d4_line, discrete_div
from wenoct.grid import Grid
from wenoct.physics import cons_to_prim, prim_to_cons
from wenoct.problems import PERIODIC, ROTATED_ANGLE, fill_ghosts, init_orszag_tang, init_rotated_shock_tube


def periodic_grid(n, length=2 * np.pi):
    nd = len(n)
    return Grid.uniform([0.0] * nd, [length] * nd, n, [True] * nd)


def test_quartic_is_differentiated_exactly():
    x = 1.0 + 0.1 * np.arange(-2, 3)
    assert d4_line(x**4, 0.1)[0] == pytest.approx(4.0, abs=1e-12)


def test_fourth_order_on_sine():
    errs = []
    for n in (16, 32, 64, 128):
        g = periodic_grid((n,))
        x = g.axis_coords(0, ghosts=True)
        errs.append(np.abs(d4(np.sin(x)[None][0], g, 0) - np.cos(g.axis_coords(0))).max())
    assert observed_orders(errs).min() >= 3.9


@given(st.integers(0, 2**32 - 1))
def test_divergence_of_curl_vanishes_3d(seed):
    g = Grid.uniform([0, 0, 0], [1, 1, 1], (8, 10, 12), [False] * 3)
    a = np.random.default_rng(seed).normal(size=(3,) + g.shape)
    b = np.zeros((3,) + g.shape)
    # curl lives on the interior; the divergence needs two more layers, so
    # evaluate on a grid that is one stencil-width smaller
    inner = Grid((4, 6, 8), (0, 0, 0), g.spacing)
    b[(slice(None),) + g.interior] = curl_3d(a, g)
    sub = b[:, 2:-2, 2:-2, 2:-2]
    div = discrete_div(sub, inner)
    assert np.abs(div).max() <= 1e-12 * np.abs(b).max() / min(g.spacing)


def test_divergence_of_curl_vanishes_2d(rng):
    g = Grid.uniform([0, 0], [1, 1], (24, 20), [True, True])
    a = rng.normal(size=(1,) + g.shape)
    fill_ghosts(a, g, ((PERIODIC, PERIODIC),) * 2, "a")
    b = np.zeros((2,) + g.shape)
    b[(slice(None),) + g.interior] = np.stack(curl_2d(a[0], g))
    fill_ghosts(b, g, ((PERIODIC, PERIODIC),) * 2, "q")
    assert np.abs(discrete_div(b, g)).max() <= 1e-12 * np.abs(b).max() / g.spacing[0]


def test_rotated_tube_left_state_field():
    g = Grid.uniform([-1, -1], [0, 0], (20, 20), [False, False])
    x, y = g.mesh(ghosts=True)
    _, a3 = init_rotated_shock_tube(x - 2.0, y)  # shifted well into the left state
    b1, b2 = curl_2d(a3[0], g)
    c, s = np.cos(ROTATED_ANGLE), np.sin(ROTATED_ANGLE)
    assert np.allclose(b1, 0.75 * c - s, atol=1e-12)
    assert np.allclose(b2, 0.75 * s + c, atol=1e-12)
    assert 0.75 * c - s == pytest.approx(0.223607, abs=1e-6)
    assert 0.75 * s + c == pytest.approx(1.229837, abs=1e-6)
    # back in the tube frame
    assert b1[0, 0] * c + b2[0, 0] * s == pytest.approx(0.75)
    assert -b1[0, 0] * s + b2[0, 0] * c == pytest.approx(1.0)


def test_orszag_tang_field_fourth_order():
    errs = []
    for n in (16, 32, 64, 128):
        g = periodic_grid((n, n))
        x, y = g.mesh(ghosts=True)
        _, a3 = init_orszag_tang(x, y)
        b1, b2 = curl_2d(a3[0], g)
        xi, yi = g.mesh()
        errs.append(max(np.abs(b1 + np.sin(yi)).max(), np.abs(b2 - np.sin(2 * xi)).max()))
    assert observed_orders(errs)[-2:].min() >= 3.9


def test_z_invariant_curl_matches_3d():
    g2 = periodic_grid((16, 16))
    g3 = periodic_grid((16, 16, 6))
    x, y = g2.mesh(ghosts=True)
    a2 = np.stack([np.sin(y), np.cos(x), np.sin(x + y)])
    a3 = np.repeat(a2[..., None], 12, axis=-1)
    b2 = curl_vector(a2, g2)
    b3 = curl_3d(a3, g3)
    assert np.allclose(b3[..., 0], b2, atol=1e-14)
    # without z-derivatives the in-plane field comes from A3 alone
    assert np.array_equal(np.stack(curl_2d(a2[2], g2)), b2[:2])


def test_periodic_field_sums_vanish(rng):
    g = periodic_grid((20, 24))
    a = rng.normal(size=(1,) + g.shape)
    fill_ghosts(a, g, ((PERIODIC, PERIODIC),) * 2, "a")
    b1, b2 = curl_2d(a[0], g)
    assert abs(b1.sum()) < 1e-11 * np.abs(b1).sum()
    assert abs(b2.sum()) < 1e-11 * np.abs(b2).sum()


def _state_with_field(g, rng):
    w = np.zeros((8,) + g.shape)
    w[0] = 1.0
    w[1:4] = 0.3
    w[4] = 2.0
    w[5:8] = rng.normal(size=(3,) + g.shape)
    return prim_to_cons(w)


def test_ct_correct_conserving_energy(rng):
    g = periodic_grid((16, 16))
    q = _state_with_field(g, rng)
    e_before = q[4].copy()
    b3_before = q[7].copy()
    a = rng.normal(size=(1,) + g.shape)
    ct_correct(q, a, g, "conserve")
    assert np.array_equal(q[4], e_before)
    assert np.array_equal(q[7], b3_before)
    assert np.allclose(np.stack([q[5], q[6]])[(slice(None),) + g.interior], np.stack(curl_2d(a[0], g)))


def test_ct_correct_keeping_pressure(rng):
    g = periodic_grid((16, 16, 16))
    q = _state_with_field(g, rng)
    p_before = cons_to_prim(q)[4]
    a = 0.2 * rng.normal(size=(3,) + g.shape)
    ct_correct(q, a, g, "pressure")
    assert np.allclose(cons_to_prim(q)[4], p_before, rtol=1e-12)
    assert np.allclose(q[5:8][(slice(None),) + g.interior], curl_vector(a, g))


def test_ct_correct_rejects_unknown_option():
    g = periodic_grid((16, 16))
    with pytest.raises(ValueError):
        ct_correct(np.zeros((8,) + g.shape), np.zeros((1,) + g.shape), g, "bogus")
