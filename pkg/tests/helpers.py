"""Shared numerical oracles for the test suite."""

import numpy as np

from wenoct.physics import GAMMA, flux


def flux_jacobian_fd(q, axis, gamma=GAMMA, h=1e-6):
    """Central-difference Jacobian of the physical flux at one conservative state."""
    q = np.asarray(q, dtype=float)
    jac = np.empty((8, 8))
    for j in range(8):
        step = h * max(1.0, abs(q[j]))
        dq = np.zeros(8)
        dq[j] = step
        jac[:, j] = (flux(q + dq, axis, gamma) - flux(q - dq, axis, gamma)) / (2 * step)
    return jac


def observed_orders(errors):
    e = np.asarray(errors, dtype=float)
    return np.log2(e[:-1] / e[1:])


def cell_averages(antiderivative, centres, dx):
    return (antiderivative(centres + dx / 2) - antiderivative(centres - dx / 2)) / dx


def padded_state(grid, prim_fn):
    """Conservative state evaluated directly on the ghost-padded mesh."""
    from wenoct.physics import prim_to_cons

    coords = grid.mesh(ghosts=True)
    w = np.array([np.broadcast_to(c, coords[0].shape) for c in prim_fn(*coords)], dtype=float)
    return prim_to_cons(w)
