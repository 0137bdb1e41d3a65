"""Reusable benchmark experiments shared by scripts/ and the acceptance suite."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagnostics import central_derivative_line, total_variation
from .physics import cons_to_prim
from .problems import (
    EXTRAP,
    ROTATED_ANGLE,
    ROTATED_TUBE,
    Problem,
    ProblemSpec,
    init_tube_1d,
)
from .timestepper import MHDSystem, ScalarAdvection, SolverConfig, advance_to


def run_problem(name, mesh=None, config: SolverConfig = SolverConfig(), t_final=None, on_step=None):
    """Create, initialise and advance a registered problem; returns ``(problem, result)``."""
    problem = Problem.create(name, mesh)
    system = MHDSystem(problem, config)
    t_final = problem.spec.t_final if t_final is None else t_final
    return problem, advance_to(system, system.initial_state(), t_final, on_step)


# ---------------------------------------------------------------- 1D advection


@dataclass
class AdvectionComparison:
    x: np.ndarray
    exact: np.ndarray
    q_hj: np.ndarray
    q_hcl: np.ndarray
    tv_dq_hj: float
    tv_dq_hcl: float


def advection_comparison(n: int = 300, cfl: float = 1.0, t_final: float = 4.0) -> AdvectionComparison:
    """Advect the trapezoid with the HJ and the conservation-law schemes."""
    out = {}
    for method in ("hj", "hcl"):
        problem = Problem.create("advection1d", (n,))
        system = ScalarAdvection(problem, method, speed=1.0, cfl=cfl)
        res = advance_to(system, system.initial_state(), t_final)
        out[method] = res.state.q[(0,) + problem.grid.interior]
    grid = problem.grid
    x = grid.axis_coords(0)
    dx = grid.spacing[0]
    tv = {m: total_variation(central_derivative_line(out[m], dx)) for m in out}
    exact = problem.spec.init(np.mod(x - t_final, 1.0))[0][0]
    return AdvectionComparison(x, exact, out["hj"], out["hcl"], tv["hj"], tv["hcl"])


# ---------------------------------------------------------------- rotated tube


def tube_reference(n: int = 2000, t_final: float = 0.2, extent: float = 1.5, cfl: float = 3.0):
    """Axis-aligned 1D run of the rotated-tube states; returns ``(xi, prim)``."""
    spec = ProblemSpec(
        "tube_reference", (-extent,), (extent,), (n,), (False,), t_final,
        ((EXTRAP, EXTRAP),), lambda x: init_tube_1d(x, *ROTATED_TUBE),
    )
    problem = Problem.create(spec)
    system = MHDSystem(problem, SolverConfig(cfl=cfl, scheme="base"))
    res = advance_to(system, system.initial_state(), t_final)
    q = res.state.q[(slice(None),) + problem.grid.interior]
    return problem.grid.axis_coords(0), cons_to_prim(q)


def rotated_cut(problem: Problem, q: np.ndarray, y: float = 0.0):
    """Points on the grid row nearest ``y``: ``(x, xi, prim in the (normal, tangent) frame)``."""
    grid = problem.grid
    j = int(np.clip(np.rint((y - grid.origin[1]) / grid.spacing[1]), 0, grid.n[1] - 1))
    g = grid.ghost
    row = q[:, g : g + grid.n[0], g + j]
    w = cons_to_prim(row)
    x = grid.axis_coords(0)
    yj = grid.origin[1] + j * grid.spacing[1]
    c, s = np.cos(ROTATED_ANGLE), np.sin(ROTATED_ANGLE)
    xi = x * c + yj * s
    wn = w.copy()
    wn[1], wn[2] = w[1] * c + w[2] * s, -w[1] * s + w[2] * c
    wn[5], wn[6] = w[5] * c + w[6] * s, -w[5] * s + w[6] * c
    return x, xi, wn


@dataclass
class TubeComparison:
    l1: dict  # component -> L1 error of the CT cut vs the 1D reference
    tv_bperp_ct: float
    tv_bperp_base: float
    max_div_ct: float
    max_div_base: float


def rotated_tube_comparison(mesh=(180, 150), t_final: float = 0.2, n_ref: int = 2000) -> TubeComparison:
    xi_ref, w_ref = tube_reference(n_ref, t_final)
    l1, tv, div = {}, {}, {}
    for scheme in ("ct", "base"):
        problem, res = run_problem("rotated_shock_tube", mesh, SolverConfig(scheme=scheme), t_final)
        x, xi, wn = rotated_cut(problem, res.state.q)
        tv[scheme] = total_variation(wn[5])
        div[scheme] = max(r.max_divB for r in res.log)
        if scheme == "ct":
            dx = problem.grid.spacing[0]
            for name, k in (("rho", 0), ("Bperp", 5), ("Bpar", 6)):
                ref = np.interp(xi, xi_ref, w_ref[k])
                l1[name] = float(np.sum(np.abs(wn[k] - ref)) * dx)
    return TubeComparison(l1, tv["ct"], tv["base"], div["ct"], div["base"])


# ---------------------------------------------------------------- 2D vs 2.5D


def cloud_2d_vs_25d(mesh=(64, 64), t_final: float = 0.06, nu: float = 0.1):
    """Max differences of B1, B2, B3 between the scalar- and vector-potential runs."""
    fields = {}
    for name in ("cloud_shock_2d", "cloud_shock_25d"):
        problem, res = run_problem(name, mesh, SolverConfig(nu=nu), t_final)
        fields[name] = res.state.q[(slice(None),) + problem.grid.interior]
    a, b = fields["cloud_shock_2d"], fields["cloud_shock_25d"]
    return {f"B{c + 1}": float(np.abs(a[5 + c] - b[5 + c]).max()) for c in range(3)}
