"""Pointwise ideal-MHD physics.

Conserved vector ``q = (rho, rho*u1, rho*u2, rho*u3, E, B1, B2, B3)`` and
primitive vector ``w = (rho, u1, u2, u3, p, B1, B2, B3)``; arrays carry the
component on axis 0.  Directions are 0-based axes (0 = x, 1 = y, 2 = z).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from numba import njit

GAMMA = 5.0 / 3.0
NVAR = 8

# component permutation that maps axis ``d`` onto x (a proper cyclic rotation)
ROTATE = (
    np.array([0, 1, 2, 3, 4, 5, 6, 7]),
    np.array([0, 2, 3, 1, 4, 6, 7, 5]),
    np.array([0, 3, 1, 2, 4, 7, 5, 6]),
)
UNROTATE = tuple(np.argsort(p) for p in ROTATE)


class InvalidStateError(ValueError):
    """Non-positive density."""


class PositivityError(RuntimeError):
    """Non-positive pressure or density encountered during a run."""

    def __init__(self, message: str, location=None, stage=None):
        super().__init__(message)
        self.location = location
        self.stage = stage


def _first_bad(mask: np.ndarray):
    idx = np.argwhere(mask)
    return tuple(int(i) for i in idx[0]) if idx.size else None


def cons_to_prim(q: np.ndarray, gamma: float = GAMMA, check: bool = True) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    rho = q[0]
    if check and np.any(rho <= 0):
        loc = _first_bad(np.atleast_1d(rho <= 0))
        raise InvalidStateError(f"non-positive density at {loc}")
    w = np.empty_like(q)
    w[0] = rho
    w[1:4] = q[1:4] / rho
    w[5:8] = q[5:8]
    kinetic = 0.5 * (q[1] ** 2 + q[2] ** 2 + q[3] ** 2) / rho
    magnetic = 0.5 * (q[5] ** 2 + q[6] ** 2 + q[7] ** 2)
    w[4] = (gamma - 1.0) * (q[4] - kinetic - magnetic)
    if check and np.any(w[4] <= 0):
        loc = _first_bad(np.atleast_1d(w[4] <= 0))
        raise PositivityError(f"non-positive pressure at {loc}", location=loc)
    return w


def prim_to_cons(w: np.ndarray, gamma: float = GAMMA) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    q = np.empty_like(w)
    rho = w[0]
    q[0] = rho
    q[1:4] = rho * w[1:4]
    q[5:8] = w[5:8]
    q[4] = (
        w[4] / (gamma - 1.0)
        + 0.5 * rho * (w[1] ** 2 + w[2] ** 2 + w[3] ** 2)
        + 0.5 * (w[5] ** 2 + w[6] ** 2 + w[7] ** 2)
    )
    return q


def flux(q: np.ndarray, axis: int, gamma: float = GAMMA) -> np.ndarray:
    """Physical flux of ``q`` along ``axis``."""
    perm, back = ROTATE[axis], UNROTATE[axis]
    qr = np.asarray(q, dtype=float)[perm]
    w = cons_to_prim(qr, gamma, check=False)
    rho, u, v, ww, p, bx, by, bz = w
    b2 = bx * bx + by * by + bz * bz
    ub = u * bx + v * by + ww * bz
    ptot = p + 0.5 * b2
    f = np.empty_like(qr)
    f[0] = rho * u
    f[1] = rho * u * u + ptot - bx * bx
    f[2] = rho * u * v - bx * by
    f[3] = rho * u * ww - bx * bz
    f[4] = u * (qr[4] + ptot) - bx * ub
    f[5] = 0.0
    f[6] = u * by - v * bx
    f[7] = u * bz - ww * bx
    return f[back]


class WaveSpeeds(NamedTuple):
    a: np.ndarray
    ca: np.ndarray
    cs: np.ndarray
    cf: np.ndarray
    lam: np.ndarray  # (8, ...) ordered lambda^1..lambda^8


def _char_speeds(rho, p, bn2, b2, gamma):
    """Sound, Alfven, slow and fast speeds squared (the discriminant never goes negative)."""
    a2 = gamma * p / rho
    ca2 = bn2 / rho
    bt2 = np.maximum(b2 - bn2, 0.0) / rho
    disc = np.sqrt((a2 - ca2) ** 2 + bt2 * (2.0 * (a2 + ca2) + bt2))
    cf2 = 0.5 * (a2 + ca2 + bt2 + disc)
    cs2 = np.maximum(a2 * ca2 / np.where(cf2 > 0, cf2, 1.0), 0.0)
    return a2, ca2, cs2, cf2


def wave_speeds(w: np.ndarray, n, gamma: float = GAMMA) -> WaveSpeeds:
    """Characteristic speeds of the primitive state ``w`` in unit direction ``n``."""
    w = np.asarray(w, dtype=float)
    n = np.asarray(n, dtype=float)
    nb = (slice(None),) + (None,) * (w.ndim - 1)
    un = np.sum(w[1:4] * n[nb], axis=0)
    bn = np.sum(w[5:8] * n[nb], axis=0)
    b2 = np.sum(w[5:8] ** 2, axis=0)
    a2, ca2, cs2, cf2 = _char_speeds(w[0], w[4], bn * bn, b2, gamma)
    a, ca, cs, cf = np.sqrt(a2), np.sqrt(ca2), np.sqrt(cs2), np.sqrt(cf2)
    # slow speed via cs = a*ca/cf keeps cs <= ca exactly
    lam = np.stack([un - cf, un - ca, un - cs, un, un, un + cs, un + ca, un + cf])
    return WaveSpeeds(a, ca, cs, cf, lam)


class EigenSystem(NamedTuple):
    lam: np.ndarray  # (..., 8)
    R: np.ndarray  # (..., 8, 8), columns are right eigenvectors
    L: np.ndarray  # (..., 8, 8), rows are left eigenvectors


@njit(cache=True)
def eigen_x(w, gamma, R, L, lam, rp, lp):
    """Eigen-decomposition in conserved variables along x for primitive state ``w``.

    Uses the eight-wave (symmetrizable) form: the divergence wave moves with
    ``u`` and the other seven vectors are the primitive-variable set with the
    conventional ``alpha_f``/``alpha_s`` renormalisation.  ``rp`` and ``lp``
    are 8x8 scratch arrays that must start zeroed; every call writes the same
    entries so they can be reused without clearing.
    """
    rho = w[0]
    u = w[1]
    v = w[2]
    ww = w[3]
    p = w[4]
    bx = w[5]
    by = w[6]
    bz = w[7]
    sqr = np.sqrt(rho)
    a2 = gamma * p / rho
    a = np.sqrt(a2)
    bt = np.sqrt(by * by + bz * bz)
    ca2 = bx * bx / rho
    bt2 = bt * bt / rho
    b2 = ca2 + bt2
    d = np.sqrt((a2 - ca2) ** 2 + bt2 * (2.0 * (a2 + ca2) + bt2))
    # cf^2 - a^2 and a^2 - cs^2 without cancellation
    if a2 >= b2:
        a2_cs2 = 0.5 * (a2 - b2 + d)
        den = d + a2 - b2
        cf2_a2 = 2.0 * a2 * bt2 / den if den > 0.0 else 0.0
    else:
        cf2_a2 = 0.5 * (b2 - a2 + d)
        den = d + b2 - a2
        a2_cs2 = 2.0 * a2 * bt2 / den if den > 0.0 else 0.0
    cf2 = a2 + cf2_a2
    cs2 = a2 - a2_cs2
    if cs2 < 0.0:
        cs2 = 0.0
    cf = np.sqrt(cf2)
    cs = np.sqrt(cs2)
    ca = np.sqrt(ca2)
    span = cf2_a2 + a2_cs2
    if span > 0.0:
        alf = np.sqrt(a2_cs2 / span)
        als = np.sqrt(cf2_a2 / span)
    else:
        alf = 1.0
        als = 0.0
    if bt > 1e-12 * np.sqrt(rho * a2 + bx * bx):
        bey = by / bt
        bez = bz / bt
    else:
        bey = 1.0 / np.sqrt(2.0)
        bez = bey
    sgn = 1.0 if bx >= 0.0 else -1.0
    qf = alf * cf * sgn
    qs = als * cs * sgn
    af = alf * a * sqr
    as_ = als * a * sqr

    lam[0] = u - cf
    lam[1] = u - ca
    lam[2] = u - cs
    lam[3] = u
    lam[4] = u
    lam[5] = u + cs
    lam[6] = u + ca
    lam[7] = u + cf

    # primitive right eigenvectors (columns), rows: rho u v w p bx by bz
    rp[0, 0] = rho * alf
    rp[1, 0] = -alf * cf
    rp[2, 0] = qs * bey
    rp[3, 0] = qs * bez
    rp[4, 0] = rho * alf * a2
    rp[6, 0] = as_ * bey
    rp[7, 0] = as_ * bez

    rp[2, 1] = -bez
    rp[3, 1] = bey
    rp[6, 1] = -bez * sgn * sqr
    rp[7, 1] = bey * sgn * sqr

    rp[0, 2] = rho * als
    rp[1, 2] = -als * cs
    rp[2, 2] = -qf * bey
    rp[3, 2] = -qf * bez
    rp[4, 2] = rho * als * a2
    rp[6, 2] = -af * bey
    rp[7, 2] = -af * bez

    rp[0, 3] = 1.0
    rp[5, 4] = 1.0

    rp[0, 5] = rho * als
    rp[1, 5] = als * cs
    rp[2, 5] = qf * bey
    rp[3, 5] = qf * bez
    rp[4, 5] = rho * als * a2
    rp[6, 5] = -af * bey
    rp[7, 5] = -af * bez

    rp[2, 6] = bez
    rp[3, 6] = -bey
    rp[6, 6] = -bez * sgn * sqr
    rp[7, 6] = bey * sgn * sqr

    rp[0, 7] = rho * alf
    rp[1, 7] = alf * cf
    rp[2, 7] = -qs * bey
    rp[3, 7] = -qs * bez
    rp[4, 7] = rho * alf * a2
    rp[6, 7] = as_ * bey
    rp[7, 7] = as_ * bez

    # primitive left eigenvectors (rows)
    nrm = 0.5 / a2
    lp[0, 1] = -nrm * alf * cf
    lp[0, 2] = nrm * qs * bey
    lp[0, 3] = nrm * qs * bez
    lp[0, 4] = nrm * alf / rho
    lp[0, 6] = nrm * as_ * bey / rho
    lp[0, 7] = nrm * as_ * bez / rho

    lp[1, 2] = -0.5 * bez
    lp[1, 3] = 0.5 * bey
    lp[1, 6] = -0.5 * bez * sgn / sqr
    lp[1, 7] = 0.5 * bey * sgn / sqr

    lp[2, 1] = -nrm * als * cs
    lp[2, 2] = -nrm * qf * bey
    lp[2, 3] = -nrm * qf * bez
    lp[2, 4] = nrm * als / rho
    lp[2, 6] = -nrm * af * bey / rho
    lp[2, 7] = -nrm * af * bez / rho

    lp[3, 0] = 1.0
    lp[3, 4] = -1.0 / a2
    lp[4, 5] = 1.0

    lp[5, 1] = nrm * als * cs
    lp[5, 2] = nrm * qf * bey
    lp[5, 3] = nrm * qf * bez
    lp[5, 4] = nrm * als / rho
    lp[5, 6] = -nrm * af * bey / rho
    lp[5, 7] = -nrm * af * bez / rho

    lp[6, 2] = 0.5 * bez
    lp[6, 3] = -0.5 * bey
    lp[6, 6] = -0.5 * bez * sgn / sqr
    lp[6, 7] = 0.5 * bey * sgn / sqr

    lp[7, 1] = nrm * alf * cf
    lp[7, 2] = -nrm * qs * bey
    lp[7, 3] = -nrm * qs * bez
    lp[7, 4] = nrm * alf / rho
    lp[7, 6] = nrm * as_ * bey / rho
    lp[7, 7] = nrm * as_ * bez / rho

    # R = M rp with M = dq/dw;  L = lp Minv with Minv = dw/dq
    gm1 = gamma - 1.0
    kin = 0.5 * (u * u + v * v + ww * ww)
    for m in range(8):
        r0 = rp[0, m]
        r1 = rp[1, m]
        r2 = rp[2, m]
        r3 = rp[3, m]
        r4 = rp[4, m]
        r5 = rp[5, m]
        r6 = rp[6, m]
        r7 = rp[7, m]
        R[0, m] = r0
        R[1, m] = u * r0 + rho * r1
        R[2, m] = v * r0 + rho * r2
        R[3, m] = ww * r0 + rho * r3
        R[4, m] = (
            kin * r0
            + rho * (u * r1 + v * r2 + ww * r3)
            + r4 / gm1
            + bx * r5
            + by * r6
            + bz * r7
        )
        R[5, m] = r5
        R[6, m] = r6
        R[7, m] = r7

        l0 = lp[m, 0]
        l1 = lp[m, 1]
        l2 = lp[m, 2]
        l3 = lp[m, 3]
        l4 = lp[m, 4] * gm1
        L[m, 0] = l0 - (u * l1 + v * l2 + ww * l3) / rho + l4 * kin
        L[m, 1] = l1 / rho - l4 * u
        L[m, 2] = l2 / rho - l4 * v
        L[m, 3] = l3 / rho - l4 * ww
        L[m, 4] = l4
        L[m, 5] = lp[m, 5] - l4 * bx
        L[m, 6] = lp[m, 6] - l4 * by
        L[m, 7] = lp[m, 7] - l4 * bz


@njit(cache=True)
def _eigen_batch(w, gamma, R, L, lam):
    rp = np.zeros((8, 8))
    lp = np.zeros((8, 8))
    for k in range(w.shape[0]):
        eigen_x(w[k], gamma, R[k], L[k], lam[k], rp, lp)


def eigensystem(w: np.ndarray, axis: int, gamma: float = GAMMA) -> EigenSystem:
    """Right/left eigenvectors of the directional flux Jacobian at primitive state(s) ``w``.

    ``w`` has shape ``(8,)`` or ``(8, ...)``; the result carries the batch
    dimensions first.
    """
    w = np.asarray(w, dtype=float)
    batch = w.shape[1:]
    wr = np.ascontiguousarray(w[ROTATE[axis]].reshape(8, -1).T)
    k = wr.shape[0]
    R = np.empty((k, 8, 8))
    L = np.empty((k, 8, 8))
    lam = np.empty((k, 8))
    _eigen_batch(wr, gamma, R, L, lam)
    back = UNROTATE[axis]
    R = R[:, back, :]
    L = L[:, :, back]
    return EigenSystem(
        lam.reshape(batch + (8,)), R.reshape(batch + (8, 8)), L.reshape(batch + (8, 8))
    )


def powell_source(w: np.ndarray, axis: int) -> np.ndarray:
    """Column that the eight-wave form adds to the flux Jacobian in the ``B[axis]`` slot."""
    w = np.asarray(w, dtype=float)
    s = np.zeros_like(w)
    s[1:4] = w[5:8]
    s[4] = np.sum(w[1:4] * w[5:8], axis=0)
    s[5:8] = w[1:4]
    return s
