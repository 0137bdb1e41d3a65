"""WENO Hamilton-Jacobi discretisation of the magnetic potential equations.

The scalar potential (2D) obeys ``A_t + u1 A_x + u2 A_y = 0``.  The vector
potential (3D, and the z-invariant 2.5D reduction) is advanced unsplit:
upwinded transport along the two transverse directions, centrally averaged
"stretching" terms, and an artificial resistivity along the component's own
direction that switches on only where the one-sided derivatives disagree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import ConfigurationError, Grid
from .weno import EPS, weno5

RES_EPS = 1e-8


@dataclass(frozen=True)
class ResistivityParams:
    nu: float = 0.1
    delta: float = 0.0
    eps_gamma: float = RES_EPS

    def __post_init__(self):
        if not 0.0 <= self.nu <= 0.5:
            raise ConfigurationError(f"nu must lie in [0, 0.5], got {self.nu}")
        if self.delta < 0:
            raise ConfigurationError(f"delta must be non-negative, got {self.delta}")


def hj_derivatives_line(line: np.ndarray, dx: float, eps: float = EPS):
    """One-sided WENO derivatives on a line padded with three ghosts each side.

    Returns ``(dminus, dplus)`` at the ``len(line) - 6`` interior points.
    """
    d = np.diff(np.asarray(line, dtype=float)) / dx
    n = d.shape[-1] - 5
    s = [d[..., k : k + n] for k in range(6)]
    dminus = weno5(s[0], s[1], s[2], s[3], s[4], eps)
    dplus = weno5(s[5], s[4], s[3], s[2], s[1], eps)
    return dminus, dplus


def hj_derivatives(a: np.ndarray, grid: Grid, axis: int, eps: float = EPS):
    """``(dminus, dplus)`` of scalar field ``a`` along ``axis`` at interior points."""
    g = grid.ghost
    sel = list(grid.interior)
    sel[axis] = slice(g - 3, g + grid.n[axis] + 3)
    sub = np.moveaxis(a[tuple(sel)], axis, -1)
    dm, dp = hj_derivatives_line(sub, grid.spacing[axis], eps)
    return np.moveaxis(dm, -1, axis), np.moveaxis(dp, -1, axis)


def resistivity_indicator(dminus, dplus, dx: float, eps: float = RES_EPS):
    """Smoothness switch in ``[0, 1/2)``: zero where both one-sided slopes agree."""
    am = (eps + (dx * np.asarray(dminus)) ** 2) ** -2
    ap = (eps + (dx * np.asarray(dplus)) ** 2) ** -2
    return np.abs(am / (am + ap) - 0.5)


def velocity_alphas(u: np.ndarray) -> np.ndarray:
    """Global Lax-Friedrichs speeds ``max |u^m|`` for each velocity component."""
    return np.abs(u).reshape(u.shape[0], -1).max(axis=1)


def _avg(pair):
    return 0.5 * (pair[0] + pair[1])


def _diss(pair):
    return 0.5 * (pair[1] - pair[0])


def rhs_hj_advection(
    a: np.ndarray, u: np.ndarray, grid: Grid, alphas=None, eps: float = EPS
) -> np.ndarray:
    """WENO-HJ with global Lax-Friedrichs Hamiltonian for ``a_t + u . grad a = 0``.

    ``a`` is a ghost-padded scalar field; ``u`` holds at least ``ndim``
    velocity components at interior points (scalars broadcast).
    """
    nd = grid.ndim
    u = [np.broadcast_to(np.asarray(u[d], dtype=float), grid.n) for d in range(nd)]
    if alphas is None:
        alphas = [np.abs(ud).max() for ud in u]
    out = np.zeros(grid.n)
    for axis in range(nd):
        pair = hj_derivatives(a, grid, axis, eps)
        out += -u[axis] * _avg(pair) + alphas[axis] * _diss(pair)
    return out


def rhs_potential_2d(
    a3: np.ndarray, u: np.ndarray, grid: Grid, alphas=None, eps: float = EPS
) -> np.ndarray:
    """Scalar potential time derivative at interior points."""
    if grid.ndim != 2:
        raise ConfigurationError("rhs_potential_2d needs a 2D grid")
    return rhs_hj_advection(a3, u, grid, alphas, eps)


def rhs_potential_vector(
    a: np.ndarray,
    u: np.ndarray,
    grid: Grid,
    dt: float,
    params: ResistivityParams = ResistivityParams(),
    alphas=None,
    eps: float = EPS,
) -> np.ndarray:
    """Vector potential time derivative at interior points, shape ``(3, *grid.n)``.

    On a 2D grid every z-derivative is dropped (the 2.5D system); on a 3D grid
    this is the full unsplit scheme.
    """
    if params.delta + dt <= 0:
        raise ConfigurationError("resistive term needs delta + dt > 0")
    if alphas is None:
        alphas = velocity_alphas(u)
    nd = grid.ndim
    # pairs[m][d]: one-sided derivatives of A^m along axis d
    pairs = [[hj_derivatives(a[m], grid, d, eps) for d in range(nd)] for m in range(3)]
    out = np.zeros((3,) + grid.n)
    g = grid.ghost
    for m in range(3):
        res = out[m]
        for d in range(nd):
            if d == m:
                continue
            # transport of A^m across direction d
            res += -u[d] * _avg(pairs[m][d]) + alphas[d] * _diss(pairs[m][d])
        if m < nd:
            for d in range(3):
                if d != m:
                    res += u[d] * _avg(pairs[d][m])
            gam = resistivity_indicator(*pairs[m][m], grid.spacing[m], params.eps_gamma)
            lo, mid, hi = list(grid.interior), list(grid.interior), list(grid.interior)
            lo[m] = slice(g - 1, g - 1 + grid.n[m])
            hi[m] = slice(g + 1, g + 1 + grid.n[m])
            am = a[m]
            lap = am[tuple(lo)] - 2.0 * am[tuple(mid)] + am[tuple(hi)]
            res += 2.0 * params.nu * gam * lap / (params.delta + dt)
    return out


def rhs_potential_3d(a, u, grid: Grid, dt, params=ResistivityParams(), alphas=None, eps=EPS):
    if grid.ndim != 3:
        raise ConfigurationError("rhs_potential_3d needs a 3D grid")
    return rhs_potential_vector(a, u, grid, dt, params, alphas, eps)


def rhs_potential_25d(a, u, grid: Grid, dt, params=ResistivityParams(), alphas=None, eps=EPS):
    if grid.ndim != 2:
        raise ConfigurationError("rhs_potential_25d needs a 2D grid")
    return rhs_potential_vector(a, u, grid, dt, params, alphas, eps)
