"""Fourth-order central curl/divergence and the constrained-transport correction.

Curl and divergence share the same 1D central operator, so ``div(curl A)``
vanishes identically (up to roundoff) for any potential.
"""

from __future__ import annotations

import numpy as np

from .grid import Grid


def d4_line(values: np.ndarray, dx: float) -> np.ndarray:
    """Central derivative on the last axis; drops two points at each end."""
    v = np.asarray(values, dtype=float)
    return (v[..., :-4] - 8.0 * v[..., 1:-3] + 8.0 * v[..., 3:-1] - v[..., 4:]) / (12.0 * dx)


def d4(field: np.ndarray, grid: Grid, axis: int) -> np.ndarray:
    """Central derivative along ``axis`` at interior points of a ghost-padded scalar field."""
    g = grid.ghost
    sel = list(grid.interior)
    sel[axis] = slice(g - 2, g + grid.n[axis] + 2)
    sub = np.moveaxis(field[tuple(sel)], axis, -1)
    return np.moveaxis(d4_line(sub, grid.spacing[axis]), -1, axis)


def curl_2d(a3: np.ndarray, grid: Grid):
    """``(B1, B2) = (D_y A3, -D_x A3)`` at interior points."""
    return d4(a3, grid, 1), -d4(a3, grid, 0)


def curl_vector(a: np.ndarray, grid: Grid) -> np.ndarray:
    """Curl of a 3-component potential on a 2D (z-invariant) or 3D grid."""
    nd = grid.ndim

    def d(m, axis):
        if axis >= nd:
            return np.zeros(grid.n)
        return d4(a[m], grid, axis)

    return np.stack(
        [d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)]
    )


def curl_3d(a: np.ndarray, grid: Grid) -> np.ndarray:
    return curl_vector(a, grid)


def discrete_div(b: np.ndarray, grid: Grid) -> np.ndarray:
    """``sum_axes D_axis B^axis`` at interior points of a ghost-padded ``B`` (component-first)."""
    out = np.zeros(grid.n)
    for axis in range(grid.ndim):
        out += d4(b[axis], grid, axis)
    return out


def ct_correct(q: np.ndarray, a: np.ndarray, grid: Grid, energy_option: str = "conserve"):
    """Replace the interior magnetic field of ``q`` by the curl of the potential, in place.

    ``a`` is ``(1, ...)`` for the 2D scalar potential (only B1, B2 change) or
    ``(3, ...)`` for the vector potential.  ``"conserve"`` keeps the total
    energy, ``"pressure"`` adjusts it so the pressure is unchanged.
    """
    if energy_option not in ("conserve", "pressure"):
        raise ValueError(f"unknown energy option {energy_option!r}")
    inner = grid.interior
    if a.shape[0] == 1:
        bnew = np.stack(curl_2d(a[0], grid))
        comps = slice(5, 7)
    else:
        bnew = curl_vector(a, grid)
        comps = slice(5, 8)
    if energy_option == "pressure":
        old = q[(comps,) + inner]
        q[(4,) + inner] += 0.5 * (np.sum(bnew**2, axis=0) - np.sum(old**2, axis=0))
    q[(comps,) + inner] = bnew
    return q
