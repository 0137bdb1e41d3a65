"""Run diagnostics: divergence, positivity, conservation and total variation."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .curl import d4, discrete_div
from .grid import Grid
from .physics import GAMMA, cons_to_prim

# points within this many cells of a non-periodic face see extrapolated ghosts
BOUNDARY_RING = 2


@dataclass(frozen=True)
class StepRecord:
    step: int
    t: float
    dt: float
    max_divB: float
    min_p: float
    min_rho: float
    sumB1: float
    sumB2: float
    sumB3: float

    def as_dict(self):
        return asdict(self)


def _trim(arr: np.ndarray, periodic) -> np.ndarray:
    sl = [slice(None)] * arr.ndim
    off = arr.ndim - len(periodic)
    for a, per in enumerate(periodic):
        if not per:
            sl[a + off] = slice(BOUNDARY_RING, -BOUNDARY_RING)
    return arr[tuple(sl)]


def max_div(q: np.ndarray, grid: Grid, periodic=None) -> float:
    """Max of the discrete divergence of the stored field over interior points.

    Points within :data:`BOUNDARY_RING` of a non-periodic face are skipped
    because their stencils reach extrapolated ghost values.
    """
    div = discrete_div(q[5 : 5 + grid.ndim], grid)
    if periodic is not None:
        div = _trim(div, periodic)
    return float(np.abs(div).max()) if div.size else 0.0


def div_tolerance(q: np.ndarray, grid: Grid, rel: float = 1e-11) -> float:
    """``rel * max|B| / min(spacing)``, the scale for a machine-level divergence."""
    inner = (slice(5, 8),) + grid.interior
    bmax = float(np.sqrt(np.sum(q[inner] ** 2, axis=0)).max())
    return rel * bmax / min(grid.spacing)


def summarize(q, grid: Grid, step=0, t=0.0, dt=0.0, gamma=GAMMA, periodic=None) -> StepRecord:
    inner = (slice(None),) + grid.interior
    qi = q[inner]
    w = cons_to_prim(qi, gamma, check=False)
    sums = qi[5:8].reshape(3, -1).sum(axis=1)
    return StepRecord(
        step=step,
        t=float(t),
        dt=float(dt),
        max_divB=max_div(q, grid, periodic),
        min_p=float(w[4].min()),
        min_rho=float(w[0].min()),
        sumB1=float(sums[0]),
        sumB2=float(sums[1]),
        sumB3=float(sums[2]),
    )


def total_variation(values) -> float:
    v = np.asarray(values, dtype=float)
    return float(np.abs(np.diff(v)).sum())


def central_derivative_line(values, dx: float, periodic: bool = True) -> np.ndarray:
    """Fourth-order central derivative of a 1D sample, wrapping if periodic."""
    v = np.asarray(values, dtype=float)
    if periodic:
        v = np.concatenate([v[-2:], v, v[:2]])
    return (v[:-4] - 8.0 * v[1:-3] + 8.0 * v[3:-1] - v[4:]) / (12.0 * dx)


def schlieren(q: np.ndarray, grid: Grid) -> np.ndarray:
    """``|grad ln rho|`` at interior points (ghosts of ``q`` must be filled)."""
    lr = np.log(q[0])
    g2 = np.zeros(grid.n)
    for axis in range(grid.ndim):
        g2 += d4(lr, grid, axis) ** 2
    return np.sqrt(g2)
