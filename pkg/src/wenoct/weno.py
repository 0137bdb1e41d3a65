"""Fifth-order WENO reconstruction shared by the conservation-law and Hamilton-Jacobi solvers.

The operator maps five values ``(v0..v4)`` in upwind order to the value at the
right edge of the centre point.  "Minus" reconstructions are obtained by the
caller reversing the stencil.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit, vectorize

EPS = 1e-6


@dataclass(frozen=True)
class WenoParams:
    epsilon: float = EPS

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")


def _betas(v0, v1, v2, v3, v4):
    b0 = 13.0 / 12.0 * (v0 - 2.0 * v1 + v2) ** 2 + 0.25 * (v0 - 4.0 * v1 + 3.0 * v2) ** 2
    b1 = 13.0 / 12.0 * (v1 - 2.0 * v2 + v3) ** 2 + 0.25 * (v1 - v3) ** 2
    b2 = 13.0 / 12.0 * (v2 - 2.0 * v3 + v4) ** 2 + 0.25 * (3.0 * v2 - 4.0 * v3 + v4) ** 2
    return b0, b1, b2


def _candidates(v0, v1, v2, v3, v4):
    h0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0
    h1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0
    h2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0
    return h0, h1, h2


def _weights(b0, b1, b2, eps):
    a0 = 1.0 / (eps + b0) ** 2
    a1 = 6.0 / (eps + b1) ** 2
    a2 = 3.0 / (eps + b2) ** 2
    s = a0 + a1 + a2
    return a0 / s, a1 / s, a2 / s


def _weno5(v0, v1, v2, v3, v4, eps):
    b0, b1, b2 = _betas(v0, v1, v2, v3, v4)
    w0, w1, w2 = _weights(b0, b1, b2, eps)
    h0, h1, h2 = _candidates(v0, v1, v2, v3, v4)
    return w0 * h0 + w1 * h1 + w2 * h2


# same source compiled for scalar use inside kernels and as an array ufunc
_betas_jit = njit(cache=True, inline="always")(_betas)
_candidates_jit = njit(cache=True, inline="always")(_candidates)
_weights_jit = njit(cache=True, inline="always")(_weights)


@njit(cache=True)
def weno5_scalar(v0, v1, v2, v3, v4, eps):
    b0, b1, b2 = _betas_jit(v0, v1, v2, v3, v4)
    w0, w1, w2 = _weights_jit(b0, b1, b2, eps)
    h0, h1, h2 = _candidates_jit(v0, v1, v2, v3, v4)
    return w0 * h0 + w1 * h1 + w2 * h2


@vectorize(["float64(float64, float64, float64, float64, float64, float64)"], cache=True)
def _weno5_ufunc(v0, v1, v2, v3, v4, eps):
    return weno5_scalar(v0, v1, v2, v3, v4, eps)


def smoothness_betas(v0, v1, v2, v3, v4):
    """Smoothness indicators of the three three-point sub-stencils."""
    return _betas(*(np.asarray(v, dtype=float) for v in (v0, v1, v2, v3, v4)))


def candidates(v0, v1, v2, v3, v4):
    return _candidates(*(np.asarray(v, dtype=float) for v in (v0, v1, v2, v3, v4)))


def nonlinear_weights(v0, v1, v2, v3, v4, eps: float = EPS):
    b = smoothness_betas(v0, v1, v2, v3, v4)
    return _weights(*b, eps)


def weno5(v0, v1, v2, v3, v4, eps: float = EPS):
    """Reconstruction at ``i + 1/2`` from ``v_{i-2} .. v_{i+2}`` (broadcasts over arrays)."""
    return _weno5_ufunc(v0, v1, v2, v3, v4, eps)
