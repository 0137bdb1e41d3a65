"""Characteristic-wise flux-split finite-difference WENO for the MHD conservation law.

Each interface flux is built by: arithmetic averaging of the primitive states,
projection onto the local characteristic fields over a six-point stencil,
global Lax-Friedrichs splitting, upwind WENO5 of both split parts, and
projection back.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .grid import Grid
from .physics import GAMMA, ROTATE, UNROTATE, cons_to_prim, eigen_x, flux, wave_speeds
from .weno import EPS, weno5, weno5_scalar


def compute_global_alphas(q: np.ndarray, grid: Grid, gamma: float = GAMMA) -> np.ndarray:
    """``alpha[axis, m] = max |lambda^m|`` over interior points, shape ``(ndim, 8)``."""
    qi = q[(slice(None),) + grid.interior]
    w = cons_to_prim(qi, gamma)
    out = np.empty((grid.ndim, 8))
    for axis in range(grid.ndim):
        n = np.zeros(3)
        n[axis] = 1.0
        lam = wave_speeds(w, n, gamma).lam
        out[axis] = np.abs(lam).reshape(8, -1).max(axis=1)
    return out


@njit(cache=True)
def _hcl_flux_lines(q, f, w, alpha, gamma, eps, out):
    """Interface fluxes for ``M`` padded lines in x-rotated variables.

    ``q``, ``f``, ``w`` are ``(M, Np, 8)`` with three ghosts each side;
    ``out[:, k]`` is the flux between padded points ``k + 2`` and ``k + 3``.
    """
    nl, npad, _ = q.shape
    nint = out.shape[1]
    R = np.empty((8, 8))
    L = np.empty((8, 8))
    lam = np.empty(8)
    rp = np.zeros((8, 8))
    lp = np.zeros((8, 8))
    wh = np.empty(8)
    V = np.empty((6, 8))
    G = np.empty((6, 8))
    gh = np.empty(8)
    for ln in range(nl):
        for k in range(nint):
            j = k + 2
            for c in range(8):
                wh[c] = 0.5 * (w[ln, j, c] + w[ln, j + 1, c])
            eigen_x(wh, gamma, R, L, lam, rp, lp)
            for s in range(6):
                p = j - 2 + s
                for m in range(8):
                    sv = 0.0
                    sg = 0.0
                    for c in range(8):
                        sv += L[m, c] * q[ln, p, c]
                        sg += L[m, c] * f[ln, p, c]
                    V[s, m] = sv
                    G[s, m] = sg
            for m in range(8):
                a = alpha[m]
                gp0 = 0.5 * (G[0, m] + a * V[0, m])
                gp1 = 0.5 * (G[1, m] + a * V[1, m])
                gp2 = 0.5 * (G[2, m] + a * V[2, m])
                gp3 = 0.5 * (G[3, m] + a * V[3, m])
                gp4 = 0.5 * (G[4, m] + a * V[4, m])
                gm1 = 0.5 * (G[1, m] - a * V[1, m])
                gm2 = 0.5 * (G[2, m] - a * V[2, m])
                gm3 = 0.5 * (G[3, m] - a * V[3, m])
                gm4 = 0.5 * (G[4, m] - a * V[4, m])
                gm5 = 0.5 * (G[5, m] - a * V[5, m])
                gh[m] = weno5_scalar(gp0, gp1, gp2, gp3, gp4, eps) + weno5_scalar(
                    gm5, gm4, gm3, gm2, gm1, eps
                )
            for c in range(8):
                s = 0.0
                for m in range(8):
                    s += R[c, m] * gh[m]
                out[ln, k, c] = s


def numerical_flux_line(
    q_line: np.ndarray,
    alpha: np.ndarray,
    axis: int = 0,
    gamma: float = GAMMA,
    eps: float = EPS,
) -> np.ndarray:
    """Interface fluxes ``f_{i+1/2}`` for one padded line.

    ``q_line`` is ``(8, n + 6)``; returns ``(8, n + 1)`` covering the
    interfaces from the left to the right edge of the interior.
    """
    out = flux_lines(np.asarray(q_line, dtype=float)[None], alpha, axis, gamma, eps)
    return out[0]


def flux_lines(
    qlines: np.ndarray, alpha: np.ndarray, axis: int, gamma: float = GAMMA, eps: float = EPS
) -> np.ndarray:
    """Batched form of :func:`numerical_flux_line`: ``(M, 8, Np) -> (M, 8, Np - 5)``."""
    perm = ROTATE[axis]
    qr = np.ascontiguousarray(np.moveaxis(qlines[:, perm, :], 1, 2))
    m, npad, _ = qr.shape
    qc = np.moveaxis(qr, 2, 0)
    wr = np.ascontiguousarray(np.moveaxis(cons_to_prim(qc, gamma, check=False), 0, 2))
    fr = np.ascontiguousarray(np.moveaxis(flux(qc, 0, gamma), 0, 2))
    out = np.empty((m, npad - 5, 8))
    _hcl_flux_lines(qr, fr, wr, np.asarray(alpha, dtype=float)[perm], gamma, eps, out)
    return np.moveaxis(out, 2, 1)[:, UNROTATE[axis], :]


def rhs_mhd(
    q: np.ndarray,
    grid: Grid,
    gamma: float = GAMMA,
    eps: float = EPS,
    alphas: np.ndarray | None = None,
) -> np.ndarray:
    """Semi-discrete ``dq/dt = -sum_axes (f_{i+1/2} - f_{i-1/2}) / dx``.

    ``q`` includes filled ghosts; the result has the same shape with zero
    ghost entries.
    """
    if alphas is None:
        alphas = compute_global_alphas(q, grid, gamma)
    g = grid.ghost
    rhs = np.zeros_like(q)
    inner = (slice(None),) + grid.interior
    for axis in range(grid.ndim):
        sel = [slice(None)] + list(grid.interior)
        sel[axis + 1] = slice(None)
        sub = q[tuple(sel)]
        # bring the sweep axis last and the transverse points to the front
        lines = np.moveaxis(sub, axis + 1, -1)
        tshape = lines.shape[1:-1]
        lines = np.moveaxis(lines, 0, -2).reshape(-1, 8, lines.shape[-1])
        fh = flux_lines(lines[:, :, g - 3 : g + grid.n[axis] + 3], alphas[axis], axis, gamma, eps)
        div = (fh[:, :, 1:] - fh[:, :, :-1]) / grid.spacing[axis]
        div = np.moveaxis(div.reshape(tshape + (8, grid.n[axis])), -2, 0)
        rhs[inner] -= np.moveaxis(div, -1, axis + 1)
    return rhs


def rhs_scalar_advection(q: np.ndarray, grid: Grid, speed: float = 1.0, eps: float = EPS):
    """Flux-split WENO5 for ``q_t + c q_x = 0`` on a 1D ghost-padded line."""
    g, n = grid.ghost, grid.n[0]
    line = q[0, g - 3 : g + n + 3]
    a = abs(speed)
    gp = 0.5 * (speed + a) * line
    gm = 0.5 * (speed - a) * line
    s = [slice(k, k + n + 1) for k in range(6)]
    fh = weno5(gp[s[0]], gp[s[1]], gp[s[2]], gp[s[3]], gp[s[4]], eps) + weno5(
        gm[s[5]], gm[s[4]], gm[s[3]], gm[s[2]], gm[s[1]], eps
    )
    out = np.zeros_like(q)
    out[0, g : g + n] = -(fh[1:] - fh[:-1]) / grid.spacing[0]
    return out
