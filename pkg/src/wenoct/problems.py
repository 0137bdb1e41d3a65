"""Benchmark initial data and ghost-cell boundary recipes.

Initialisers return primitive states and (optionally) a magnetic potential on
the full ghost-padded mesh.  In constrained-transport mode the interior field
is then replaced by the discrete curl of the initial potential so the
discrete divergence vanishes at ``t = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .curl import curl_2d, curl_vector
from .grid import ConfigurationError, Grid
from .physics import GAMMA, cons_to_prim, prim_to_cons

FACE_KINDS = ("periodic", "extrap", "inflow", "lattice")


@dataclass(frozen=True)
class Face:
    """Boundary recipe for one side of one axis.

    ``extrap`` copies the nearest interior value for the conserved state and
    extrapolates the potential linearly; ``inflow`` freezes the conserved
    ghosts at their initial values and leaves the potential ghosts alone (the
    solver advances them with the frozen state's rate); ``lattice`` copies along an integer cell
    vector ``(shift along axis 0, step along axis 1)`` parallel to a planar
    front, with linear extrapolation of the potential along that vector.
    """

    kind: str
    lattice: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in FACE_KINDS:
            raise ConfigurationError(f"unknown boundary recipe {self.kind!r}")
        if self.kind == "lattice" and (self.lattice is None or self.lattice[1] <= 0):
            raise ConfigurationError("lattice recipe needs a vector with positive step")


PERIODIC = Face("periodic")
EXTRAP = Face("extrap")
INFLOW = Face("inflow")


@dataclass
class BoundaryContext:
    """Per-run boundary data: frozen inflow slabs and periodic potential offsets."""

    frozen: dict = field(default_factory=dict)
    a_offsets: np.ndarray | None = None  # (ndim, ncomp): A(r + L e_axis) - A(r)


def _slab(grid: Grid, axis: int, side: int, ndim_lead: int = 1):
    g = grid.ghost
    sl = [slice(None)] * (grid.ndim + ndim_lead)
    if side == 0:
        sl[axis + ndim_lead] = slice(0, g)
    else:
        sl[axis + ndim_lead] = slice(g + grid.n[axis], None)
    return tuple(sl)


def _take(data, axis, idx):
    return np.take(data, idx, axis=axis + 1)


def _put(data, axis, idx, values):
    sl = [slice(None)] * data.ndim
    sl[axis + 1] = idx
    data[tuple(sl)] = values


def _fill_lattice(data, grid: Grid, axis: int, side: int, vec, linear: bool):
    if grid.ndim != 2 or axis != 1:
        raise ConfigurationError("lattice recipe is only defined on the y faces of a 2D grid")
    g, n = grid.ghost, grid.n[1]
    vx, vy = vec
    npad = grid.shape[0]
    cols = np.arange(npad)
    for k in range(1, g + 1):
        m = -(-k // vy)  # ceil(k / vy)
        if side == 1:
            j = g + n - 1 + k
            sj, si = j - m * vy, cols - m * vx
            sj2, si2 = sj - vy, si - vx
        else:
            j = g - k
            sj, si = j + m * vy, cols + m * vx
            sj2, si2 = sj + vy, si + vx
        si = np.clip(si, 0, npad - 1)
        val = data[:, si, sj]
        if linear:
            val = val + m * (val - data[:, np.clip(si2, 0, npad - 1), sj2])
        data[:, :, j] = val


def fill_ghosts(data: np.ndarray, grid: Grid, faces, kind: str, ctx: BoundaryContext | None = None):
    """Write the ghost layers of a component-first field in place.

    ``kind`` is ``"q"`` for conserved states or ``"a"`` for potentials.
    Faces are filled in axis order so later axes see earlier ghost values in
    the corners.  Interior values are never touched.
    """
    if kind not in ("q", "a"):
        raise ConfigurationError(f"unknown field kind {kind!r}")
    ctx = ctx or BoundaryContext()
    g = grid.ghost
    for axis in range(grid.ndim):
        n = grid.n[axis]
        for side in (0, 1):
            face = faces[axis][side]
            ghost_idx = np.arange(g) if side == 0 else np.arange(g + n, n + 2 * g)
            if face.kind == "periodic":
                src = ghost_idx + (n if side == 0 else -n)
                vals = _take(data, axis, src)
                if kind == "a" and ctx.a_offsets is not None:
                    off = ctx.a_offsets[axis].reshape((-1,) + (1,) * grid.ndim)
                    vals = vals - off if side == 0 else vals + off
                _put(data, axis, ghost_idx, vals)
            elif face.kind == "lattice":
                _fill_lattice(data, grid, axis, side, face.lattice, linear=(kind == "a"))
            elif face.kind == "inflow":
                if kind == "q":
                    data[_slab(grid, axis, side)] = ctx.frozen[(axis, side)]
            else:
                edge = g if side == 0 else g + n - 1
                inner = g + 1 if side == 0 else g + n - 2
                dist = np.abs(ghost_idx - edge)
                base = _take(data, axis, [edge])
                if kind == "a":
                    slope = base - _take(data, axis, [inner])
                    shape = [1] * data.ndim
                    shape[axis + 1] = g
                    vals = base + dist.reshape(shape) * slope
                else:
                    vals = np.repeat(base, g, axis=axis + 1)
                _put(data, axis, ghost_idx, vals)
    return data


# ---------------------------------------------------------------- initial data

ALFVEN_AMP = 0.1


def advection_profile(x):
    """Trapezoid with linear ramps on [0.25, 0.4] and [0.6, 0.75], plateau 2."""
    x = np.asarray(x, dtype=float)
    return np.select(
        [x < 0.25, x < 0.4, x <= 0.6, x < 0.75],
        [0.0, (x - 0.25) / 0.075, 2.0, (0.75 - x) / 0.075],
        0.0,
    )


def _piecewise(mask, left, right):
    """Select between two primitive 8-vectors with a boolean mask."""
    left = np.asarray(left, dtype=float).reshape((8,) + (1,) * mask.ndim)
    right = np.asarray(right, dtype=float).reshape((8,) + (1,) * mask.ndim)
    return np.where(mask[None], left, right)


def tube_states(left, right, normal_angle=0.0):
    """Rotate shock-tube states given as (rho, u_n, u_t, u3, p, B_n, B_t, B3) into x/y."""
    c, s = np.cos(normal_angle), np.sin(normal_angle)
    out = []
    for st in (left, right):
        rho, un, ut, u3, p, bn, bt, b3 = st
        out.append([rho, un * c - ut * s, un * s + ut * c, u3, p, bn * c - bt * s, bn * s + bt * c, b3])
    return out


BRIO_WU = ((1.0, 0, 0, 0, 1.0, 0.75, 1.0, 0), (0.125, 0, 0, 0, 0.1, 0.75, -1.0, 0))
ROTATED_TUBE = ((1.0, -0.4, 0, 0, 1.0, 0.75, 1.0, 0), (0.2, -0.4, 0, 0, 0.1, 0.75, -1.0, 0))
ROTATED_ANGLE = float(np.arctan(0.5))

CLOUD_POST = (3.86859, 11.2536, 0.0, 0.0, 167.345, 0.0, 2.1826182, -2.1826182)
CLOUD_PRE = (1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.56418958, 0.56418958)
CLOUD_SHOCK_X = 0.05
CLOUD_RHO = 10.0
CLOUD_RADIUS = 0.15


def init_tube_1d(x, left, right, x0=0.0):
    return _piecewise(x < x0, left, right), None


def init_rotated_shock_tube(x, y, alpha=ROTATED_ANGLE):
    """Rotated tube: the front is the line ``xi = x cos(alpha) + y sin(alpha) = 0``."""
    c, s = np.cos(alpha), np.sin(alpha)
    xi = x * c + y * s
    eta = -x * s + y * c
    xi = np.where(np.abs(xi) < 1e-12, 0.0, xi)
    left = xi < 0
    wl, wr = tube_states(*ROTATED_TUBE, normal_angle=alpha)
    w = _piecewise(left, wl, wr)
    a3 = 0.75 * eta + np.where(left, -xi, xi)
    return w, a3[None]


def init_orszag_tang(x, y, gamma=GAMMA):
    w = np.zeros((8,) + x.shape)
    w[0] = gamma**2
    w[1] = -np.sin(y)
    w[2] = np.sin(x)
    w[4] = gamma
    w[5] = -np.sin(y)
    w[6] = np.sin(2.0 * x)
    a3 = 0.5 * np.cos(2.0 * x) + np.cos(y)
    return w, a3[None]


def _cloud_prim(x, r2):
    w = _piecewise(x < CLOUD_SHOCK_X, CLOUD_POST, CLOUD_PRE)
    cloud = (r2 < CLOUD_RADIUS**2) & (x >= CLOUD_SHOCK_X)
    w[0] = np.where(cloud, CLOUD_RHO, w[0])
    return w


def init_cloud_shock(*coords, vector: bool = False):
    """Shock at x = 0.05 hitting a dense cloud centred at (0.25, 0.5[, 0.5])."""
    x = coords[0]
    centre = (0.25, 0.5, 0.5)
    r2 = sum((c - centre[i]) ** 2 for i, c in enumerate(coords))
    w = _cloud_prim(x, r2)
    left = x <= CLOUD_SHOCK_X
    dx = x - CLOUD_SHOCK_X
    bl, br = CLOUD_POST[6], CLOUD_PRE[6]
    if not vector:
        a = np.where(left, -bl * dx, -br * dx)[None]
    else:
        a = np.zeros((3,) + x.shape)
        a[1] = np.where(left, -bl * dx, br * dx)
        a[2] = np.where(left, -bl * dx, -br * dx)
    return w, a


def alfven_frame(ndim: int):
    """Propagation direction and transverse unit vectors of the oblique Alfven wave."""
    if ndim == 2:
        n = np.array([2.0, 1.0, 0.0]) / np.sqrt(5.0)
    else:
        n = np.array([2.0, 1.0, 1.0]) / np.sqrt(6.0)
    t1 = np.cross(n, [0.0, 0.0, 1.0])
    t1 /= np.linalg.norm(t1)
    t2 = np.cross(n, t1)
    return n, t1, t2


def alfven_extent(ndim: int):
    """Box whose edges each hold exactly one wavelength along the propagation direction."""
    n, _, _ = alfven_frame(ndim)
    return tuple(1.0 / n[a] for a in range(ndim))


def alfven_solution(coords, t: float = 0.0, ndim: int | None = None):
    """Exact circularly polarised Alfven wave travelling along ``-n`` with unit period.

    Returns primitives and the potential (scalar in 2D, vector in 3D).
    """
    ndim = ndim or len(coords)
    n, t1, t2 = alfven_frame(ndim)
    r = [coords[a] for a in range(len(coords))] + [np.zeros_like(coords[0])] * (3 - len(coords))
    xi = sum(n[a] * r[a] for a in range(3))
    ph = 2.0 * np.pi * (xi + t)
    sn, cs = np.sin(ph), np.cos(ph)
    t1b = t1.reshape((3,) + (1,) * xi.ndim)
    t2b = t2.reshape((3,) + (1,) * xi.ndim)
    bperp = ALFVEN_AMP * (sn * t1b + cs * t2b)
    w = np.zeros((8,) + xi.shape)
    w[0] = 1.0
    w[4] = 0.1
    w[1:4] = bperp
    w[5:8] = n.reshape((3,) + (1,) * xi.ndim) + bperp
    apert = ALFVEN_AMP / (2.0 * np.pi) * (sn * t1b + cs * t2b)
    rv = np.stack(r)
    a = 0.5 * np.cross(n, rv, axis=0) + apert
    if len(coords) == 2:
        # scalar potential: B0 = curl(A3 e_z) needs the full (not halved) linear part
        a3 = n[0] * r[1] - n[1] * r[0] + apert[2]
        return w, a3[None]
    return w, a


def alfven_offsets(ndim: int) -> np.ndarray:
    """Jump of the potential across one period along each axis."""
    n, _, _ = alfven_frame(ndim)
    ext = alfven_extent(ndim)
    if ndim == 2:
        return np.array([[-n[1] * ext[0]], [n[0] * ext[1]]])
    off = np.zeros((3, 3))
    for a in range(3):
        e = np.zeros(3)
        e[a] = ext[a]
        off[a] = 0.5 * np.cross(n, e)
    return off


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    lower: tuple
    upper: tuple
    mesh: tuple
    periodic: tuple
    t_final: float
    faces: tuple
    init: Callable
    potential: str = "none"  # none | scalar | vector
    gamma: float = GAMMA
    a_offsets: np.ndarray | None = None
    exact: Callable | None = None
    scalar: bool = False

    @property
    def ndim(self) -> int:
        return len(self.mesh)


def _faces(ndim, face):
    return tuple((face, face) for _ in range(ndim))


def _registry():
    sq5, sq6 = np.sqrt(5.0), np.sqrt(6.0)
    lat = Face("lattice", (-1, 2))
    outflow = (INFLOW, EXTRAP)
    return {
        "advection1d": ProblemSpec(
            "advection1d", (0.0,), (1.0,), (300,), (True,), 4.0,
            _faces(1, PERIODIC), lambda x: (advection_profile(x)[None], None), scalar=True,
        ),
        "briowu1d": ProblemSpec(
            "briowu1d", (-1.0,), (1.0,), (800,), (False,), 0.2,
            _faces(1, EXTRAP), lambda x: init_tube_1d(x, *BRIO_WU),
        ),
        "alfven2d": ProblemSpec(
            "alfven2d", (0.0, 0.0), alfven_extent(2), (16, 32), (True, True), 1.0,
            _faces(2, PERIODIC), lambda x, y: alfven_solution((x, y)), "scalar",
            a_offsets=alfven_offsets(2), exact=lambda c, t: alfven_solution(c, t),
        ),
        "alfven3d": ProblemSpec(
            "alfven3d", (0.0, 0.0, 0.0), alfven_extent(3), (16, 32, 32), (True,) * 3, 1.0,
            _faces(3, PERIODIC), lambda x, y, z: alfven_solution((x, y, z)), "vector",
            a_offsets=alfven_offsets(3), exact=lambda c, t: alfven_solution(c, t),
        ),
        "rotated_shock_tube": ProblemSpec(
            "rotated_shock_tube", (-1.2, -1.0), (1.2, 1.0), (180, 150), (False, False), 0.2,
            ((EXTRAP, EXTRAP), (lat, lat)), init_rotated_shock_tube, "scalar",
        ),
        "orszag_tang": ProblemSpec(
            "orszag_tang", (0.0, 0.0), (2 * np.pi, 2 * np.pi), (96, 96), (True, True), 3.0,
            _faces(2, PERIODIC), init_orszag_tang, "scalar",
            a_offsets=np.zeros((2, 1)),
        ),
        "cloud_shock_2d": ProblemSpec(
            "cloud_shock_2d", (0.0, 0.0), (1.0, 1.0), (64, 64), (False, False), 0.06,
            (outflow, (EXTRAP, EXTRAP)), lambda x, y: init_cloud_shock(x, y), "scalar",
        ),
        "cloud_shock_25d": ProblemSpec(
            "cloud_shock_25d", (0.0, 0.0), (1.0, 1.0), (64, 64), (False, False), 0.06,
            (outflow, (EXTRAP, EXTRAP)), lambda x, y: init_cloud_shock(x, y, vector=True),
            "vector",
        ),
        "cloud_shock_3d": ProblemSpec(
            "cloud_shock_3d", (0.0,) * 3, (1.0,) * 3, (32, 32, 32), (False,) * 3, 0.06,
            (outflow, (EXTRAP, EXTRAP), (EXTRAP, EXTRAP)),
            lambda x, y, z: init_cloud_shock(x, y, z, vector=True), "vector",
        ),
    }


PROBLEMS = _registry()


def get_problem(name: str) -> ProblemSpec:
    try:
        return PROBLEMS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown problem {name!r}; choose from {', '.join(sorted(PROBLEMS))}"
        ) from None


@dataclass
class Problem:
    """A problem specification bound to a concrete mesh."""

    spec: ProblemSpec
    grid: Grid
    ctx: BoundaryContext

    @classmethod
    def create(cls, spec: ProblemSpec | str, mesh=None) -> "Problem":
        if isinstance(spec, str):
            spec = get_problem(spec)
        mesh = tuple(mesh) if mesh is not None else spec.mesh
        if len(mesh) != spec.ndim:
            raise ConfigurationError(f"{spec.name} needs {spec.ndim} mesh sizes, got {mesh}")
        grid = Grid.uniform(spec.lower, spec.upper, mesh, spec.periodic)
        return cls(spec, grid, BoundaryContext(a_offsets=spec.a_offsets))

    @property
    def gamma(self) -> float:
        return self.spec.gamma

    @property
    def has_potential(self) -> bool:
        return self.spec.potential != "none"

    def initial_data(self, ct: bool = True):
        """Conserved state and potential on the padded mesh, ghosts filled.

        With ``ct`` the interior field is taken from the curl of the potential.
        """
        coords = self.grid.mesh(ghosts=True)
        w, a = self.spec.init(*coords)
        if w.shape[0] == 1:
            # scalar transport problem: the "state" is the scalar itself
            return w.astype(float), None
        for (axis, side), face in self._faces():
            if face.kind == "inflow":
                self.ctx.frozen[(axis, side)] = prim_to_cons(w, self.gamma)[
                    _slab(self.grid, axis, side)
                ].copy()
        if a is not None and ct and self.has_potential:
            self.fill_a(a)
            if self.spec.potential == "scalar":
                b = np.stack(curl_2d(a[0], self.grid))
                w[(slice(5, 7),) + self.grid.interior] = b
            else:
                w[(slice(5, 8),) + self.grid.interior] = curl_vector(a, self.grid)
        q = prim_to_cons(w, self.gamma)
        self.fill_q(q)
        return q, (a if (ct and self.has_potential) else None)

    def inflow_potential_rates(self):
        """``[(slab, dA/dt)]`` for the inflow ghost slabs.

        In the Weyl gauge ``A_t = u x B``, which is constant in time for the
        frozen inflow state, so the ghosts can be advanced exactly.
        """
        rates = []
        for key, cons in self.ctx.frozen.items():
            w = cons_to_prim(cons, self.gamma)
            rate = np.cross(w[1:4], w[5:8], axis=0)
            if self.spec.potential == "scalar":
                rate = rate[2:]
            rates.append((_slab(self.grid, *key), rate))
        return rates

    def _faces(self):
        for axis, pair in enumerate(self.spec.faces):
            for side, face in enumerate(pair):
                yield (axis, side), face

    def fill_q(self, q):
        return fill_ghosts(q, self.grid, self.spec.faces, "q", self.ctx)

    def fill_a(self, a):
        return fill_ghosts(a, self.grid, self.spec.faces, "a", self.ctx)

    def exact(self, t: float):
        if self.spec.exact is None:
            raise ConfigurationError(f"{self.spec.name} has no exact solution")
        return self.spec.exact(self.grid.mesh(), t)
