"""Mesh-doubling convergence studies against an exact solution."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import ConfigurationError, Grid
from .problems import Problem, get_problem
from .timestepper import MHDSystem, SolverConfig, advance_to

NORM_NOTE = "L2 = sqrt(sum e^2 dV) (volume weighted), Linf = max |e| over interior points"


def l2_error(err: np.ndarray, grid: Grid) -> float:
    return float(np.sqrt(np.sum(np.asarray(err) ** 2) * grid.cell_volume()))


def linf_error(err: np.ndarray) -> float:
    return float(np.max(np.abs(err))) if np.size(err) else 0.0


def eoc(e_coarse: float, e_fine: float, ratio: float = 2.0) -> float:
    """Experimental order ``log_ratio(e_coarse / e_fine)``."""
    if e_coarse <= 0 or e_fine <= 0:
        return float("nan")
    return float(np.log(e_coarse / e_fine) / np.log(ratio))


@dataclass
class ConvergenceReport:
    problem: str
    meshes: list = field(default_factory=list)
    l2: dict = field(default_factory=dict)  # component -> list per level
    linf: dict = field(default_factory=dict)
    note: str = NORM_NOTE

    def add_level(self, mesh, errors: dict, grid: Grid):
        self.meshes.append(tuple(mesh))
        for name, e in errors.items():
            self.l2.setdefault(name, []).append(l2_error(e, grid))
            self.linf.setdefault(name, []).append(linf_error(e))

    def eoc(self, name: str, norm: str = "l2") -> list:
        vals = (self.l2 if norm == "l2" else self.linf)[name]
        return [eoc(a, b) for a, b in zip(vals[:-1], vals[1:])]

    def rows(self):
        """Flat table: one row per level, columns ``mesh, <comp>_L2, <comp>_Linf, ...``."""
        names = list(self.l2)
        header = ["mesh"] + [f"{n}_{k}" for n in names for k in ("L2", "Linf", "EOC_L2", "EOC_Linf")]
        out = []
        for i, mesh in enumerate(self.meshes):
            row = ["x".join(str(m) for m in mesh)]
            for n in names:
                e2 = self.eoc(n, "l2")
                ei = self.eoc(n, "linf")
                row += [
                    self.l2[n][i],
                    self.linf[n][i],
                    e2[i - 1] if i else float("nan"),
                    ei[i - 1] if i else float("nan"),
                ]
            out.append(row)
        return header, out


def check_doubling(meshes) -> None:
    for a, b in zip(meshes[:-1], meshes[1:]):
        if any(2 * x != y for x, y in zip(a, b)):
            raise ConfigurationError(f"meshes {a} -> {b} are not a doubling sequence")


def component_errors(problem: Problem, q, a, t: float) -> dict:
    w_ex, a_ex = problem.exact(t)
    inner = (slice(None),) + problem.grid.interior
    qi = q[inner]
    out = {f"B{c + 1}": qi[5 + c] - w_ex[5 + c] for c in range(3)}
    if a is not None:
        ai = a[inner]
        if ai.shape[0] == 1:
            out["A3"] = ai[0] - a_ex[0]
        else:
            for k in range(3):
                out[f"A{k + 1}"] = ai[k] - a_ex[k]
    return out


def convergence_study(
    problem: str, levels: int, base_mesh=None, config: SolverConfig = SolverConfig(), t_final=None
) -> ConvergenceReport:
    spec = get_problem(problem)
    if spec.exact is None:
        raise ConfigurationError(f"{problem} has no exact solution for a convergence study")
    if levels < 2:
        raise ConfigurationError("need at least two levels")
    base = tuple(base_mesh) if base_mesh is not None else spec.mesh
    meshes = [tuple(m * 2**k for m in base) for k in range(levels)]
    check_doubling(meshes)
    t_final = spec.t_final if t_final is None else t_final
    report = ConvergenceReport(problem)
    for mesh in meshes:
        prob = Problem.create(spec, mesh)
        system = MHDSystem(prob, config)
        res = advance_to(system, system.initial_state(), t_final)
        report.add_level(mesh, component_errors(prob, res.state.q, res.state.a, t_final), prob.grid)
    return report
