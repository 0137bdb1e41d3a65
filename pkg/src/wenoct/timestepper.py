"""Ten-stage, fourth-order low-storage SSP Runge-Kutta driver with per-stage CT.

The integrator works on "registers": tuples of arrays advanced with identical
coefficients.  For constrained transport a register is ``(Q, A)``; the
magnetic field of ``Q`` is replaced by ``curl(A)`` after every stage.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .curl import ct_correct
from .diagnostics import StepRecord, summarize
from .grid import ConfigurationError, Grid
from .hcl import compute_global_alphas, rhs_mhd, rhs_scalar_advection
from .hj import ResistivityParams, rhs_hj_advection, rhs_potential_2d, rhs_potential_vector
from .physics import GAMMA, PositivityError, cons_to_prim, wave_speeds
from .problems import Problem

SCHEMES = ("ct", "base")
ENERGY_OPTIONS = ("conserve", "pressure")


@dataclass(frozen=True)
class SolverConfig:
    cfl: float = 3.0
    scheme: str = "ct"
    energy_option: str = "conserve"
    nu: float = 0.1
    delta: float = 0.0
    weno_eps: float = 1e-6
    fixed_dt: float | None = None
    max_steps: int | None = None
    diag_every: int = 1

    def __post_init__(self):
        if not self.cfl > 0:
            raise ConfigurationError(f"cfl must be positive, got {self.cfl}")
        if self.scheme not in SCHEMES:
            raise ConfigurationError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.energy_option not in ENERGY_OPTIONS:
            raise ConfigurationError(
                f"energy option must be one of {ENERGY_OPTIONS}, got {self.energy_option!r}"
            )
        if self.fixed_dt is not None and not self.fixed_dt > 0:
            raise ConfigurationError("fixed_dt must be positive")
        if self.diag_every < 1:
            raise ConfigurationError("diag_every must be >= 1")
        ResistivityParams(self.nu, self.delta)

    @property
    def resistivity(self) -> ResistivityParams:
        return ResistivityParams(self.nu, self.delta)


@dataclass
class State:
    regs: tuple
    t: float = 0.0

    @property
    def q(self) -> np.ndarray:
        return self.regs[0]

    @property
    def a(self) -> np.ndarray | None:
        return self.regs[1] if len(self.regs) > 1 else None

    def copy(self) -> "State":
        return State(tuple(r.copy() for r in self.regs), self.t)


@dataclass
class StageState:
    """The two persistent registers of the low-storage scheme."""

    q1: tuple
    q2: tuple


def compute_dt(q: np.ndarray, grid: Grid, cfl: float, gamma: float = GAMMA) -> float:
    """``cfl / sum_axes max(|u_axis| + c_f,axis) / dx_axis``."""
    w = cons_to_prim(q[(slice(None),) + grid.interior], gamma)
    rate = 0.0
    for axis in range(grid.ndim):
        n = np.zeros(3)
        n[axis] = 1.0
        lam = wave_speeds(w, n, gamma).lam
        rate += float(np.max(np.maximum(np.abs(lam[0]), np.abs(lam[7])))) / grid.spacing[axis]
    if rate <= 0:
        raise ConfigurationError("maximum wave speed is zero; no CFL step size exists")
    return cfl / rate


def _axpy(regs, coef, incr):
    return tuple(r + coef * d for r, d in zip(regs, incr))


def ssp_rk4_step(
    y: Sequence[np.ndarray],
    dt: float,
    rhs: Callable,
    fill: Callable | None = None,
    correct: Callable | None = None,
) -> tuple:
    """One step of the ten-stage fourth-order SSP scheme.

    ``rhs(regs)`` returns increments shaped like ``regs``; ``fill(regs)``
    writes ghosts in place before each evaluation; ``correct(regs)`` is the
    in-place post-stage projection (ghosts are filled before it is called).
    Only the two registers ``q1`` and ``q2`` persist across stages.
    """
    fill = fill or (lambda regs: None)
    correct = correct or (lambda regs: None)

    def stage(regs, idx):
        fill(regs)
        try:
            incr = rhs(regs)
        except PositivityError as exc:
            exc.stage = idx
            raise
        out = _axpy(regs, dt / 6.0, incr)
        fill(out)
        correct(out)
        return out

    st = StageState(tuple(np.array(r, dtype=float) for r in y), tuple(np.array(r, dtype=float) for r in y))
    for i in range(5):
        st.q1 = stage(st.q1, i + 1)
    st.q2 = tuple(a / 25.0 + 9.0 / 25.0 * b for a, b in zip(st.q2, st.q1))
    st.q1 = tuple(15.0 * a - 5.0 * b for a, b in zip(st.q2, st.q1))
    fill(st.q1)
    correct(st.q1)
    for i in range(5, 9):
        st.q1 = stage(st.q1, i + 1)
    fill(st.q1)
    try:
        incr = rhs(st.q1)
    except PositivityError as exc:
        exc.stage = 10
        raise
    out = tuple(a + 0.6 * b + dt / 10.0 * d for a, b, d in zip(st.q2, st.q1, incr))
    fill(out)
    correct(out)
    return out


class MHDSystem:
    """Semi-discrete MHD (+ potential) system bound to a problem and solver settings."""

    def __init__(self, problem: Problem, config: SolverConfig = SolverConfig()):
        self.problem = problem
        self.config = config
        self.grid = problem.grid
        self.gamma = problem.gamma
        self.ct = config.scheme == "ct" and problem.has_potential
        self.dt = None  # frozen for the current step (enters the resistive term)
        self._inflow_rates = []

    def initial_state(self) -> State:
        q, a = self.problem.initial_data(ct=self.ct)
        if self.ct:
            self._inflow_rates = self.problem.inflow_potential_rates()
        return State((q, a) if self.ct else (q,), 0.0)

    def fill(self, regs):
        self.problem.fill_q(regs[0])
        if len(regs) > 1:
            self.problem.fill_a(regs[1])

    def correct(self, regs):
        if len(regs) > 1:
            ct_correct(regs[0], regs[1], self.grid, self.config.energy_option)
            self.problem.fill_q(regs[0])

    def rhs(self, regs):
        q = regs[0]
        grid = self.grid
        alphas = compute_global_alphas(q, grid, self.gamma)
        dq = rhs_mhd(q, grid, self.gamma, self.config.weno_eps, alphas)
        if len(regs) == 1:
            return (dq,)
        a = regs[1]
        inner = (slice(None),) + grid.interior
        u = q[(slice(1, 4),) + grid.interior] / q[(0,) + grid.interior]
        da = np.zeros_like(a)
        if self.problem.spec.potential == "scalar":
            da[inner] = rhs_potential_2d(a[0], u, grid, eps=self.config.weno_eps)[None]
        else:
            da[inner] = rhs_potential_vector(
                a, u, grid, self.dt, self.config.resistivity, eps=self.config.weno_eps
            )
        for slab, rate in self._inflow_rates:
            da[slab] = rate
        return dq, da

    def stable_dt(self, state: State) -> float:
        if self.config.fixed_dt is not None:
            return self.config.fixed_dt
        return compute_dt(state.q, self.grid, self.config.cfl, self.gamma)

    def step(self, state: State, dt: float) -> State:
        self.dt = dt
        regs = ssp_rk4_step(state.regs, dt, self.rhs, self.fill, self.correct if self.ct else None)
        return State(regs, state.t + dt)

    def record(self, state: State, step: int, dt: float) -> StepRecord:
        return summarize(
            state.q, self.grid, step, state.t, dt, self.gamma, self.problem.spec.periodic
        )


class ScalarAdvection:
    """``q_t + c q_x = 0`` on a periodic line, solved as a conservation law or as an HJ equation."""

    def __init__(self, problem: Problem, method: str = "hj", speed: float = 1.0, cfl: float = 1.0):
        if method not in ("hj", "hcl"):
            raise ConfigurationError(f"method must be 'hj' or 'hcl', got {method!r}")
        self.problem, self.method, self.speed, self.cfl = problem, method, speed, cfl
        self.grid = problem.grid
        self.config = SolverConfig(cfl=cfl)

    def initial_state(self) -> State:
        q, _ = self.problem.initial_data()
        self.problem.fill_a(q)
        return State((q,), 0.0)

    def fill(self, regs):
        self.problem.fill_a(regs[0])

    def rhs(self, regs):
        q = regs[0]
        if self.method == "hcl":
            return (rhs_scalar_advection(q, self.grid, self.speed),)
        out = np.zeros_like(q)
        out[(0,) + self.grid.interior] = rhs_hj_advection(q[0], [self.speed], self.grid)
        return (out,)

    def stable_dt(self, state: State) -> float:
        return self.cfl * self.grid.spacing[0] / abs(self.speed)

    def step(self, state: State, dt: float) -> State:
        return State(ssp_rk4_step(state.regs, dt, self.rhs, self.fill), state.t + dt)

    def record(self, state, step, dt):
        return None


@dataclass
class RunResult:
    state: State
    log: list = field(default_factory=list)
    steps: int = 0


def advance_to(system, state: State, t_final: float, on_step: Callable | None = None) -> RunResult:
    """Step ``system`` from ``state.t`` to ``t_final``, clamping the last step.

    A diagnostic record is logged at the start and every ``diag_every`` steps
    (and at the end).  Positivity failures propagate with the stage index.
    """
    log = []
    cfg = getattr(system, "config", SolverConfig())
    rec = system.record(state, 0, 0.0)
    if rec is not None:
        log.append(rec)
    steps = 0
    tol = 1e-14 * max(1.0, abs(t_final))
    while t_final - state.t > tol:
        if cfg.max_steps is not None and steps >= cfg.max_steps:
            break
        dt = min(system.stable_dt(state), t_final - state.t)
        state = system.step(state, dt)
        steps += 1
        if t_final - state.t <= tol:
            state = replace(state, t=t_final) if abs(state.t - t_final) <= tol else state
        last = t_final - state.t <= tol
        if steps % cfg.diag_every == 0 or last:
            rec = system.record(state, steps, dt)
            if rec is not None:
                log.append(rec)
                if on_step is not None:
                    on_step(rec)
    return RunResult(state, log, steps)
