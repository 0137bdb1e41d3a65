"""Command-line driver: ``wenoct run`` and ``wenoct converge``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import RunConfig, build_config, parse_mesh
from .convergence import convergence_study
from .diagnostics import schlieren
from .grid import ConfigurationError
from .io import slice_extract, write_csv, write_fields, write_series
from .physics import InvalidStateError, PositivityError
from .problems import PROBLEMS, Problem
from .timestepper import MHDSystem, SolverConfig, advance_to

log = logging.getLogger("wenoct")


def run(cfg: RunConfig):
    """Advance the configured problem and write fields, slice and diagnostics."""
    problem = Problem.create(cfg.problem, cfg.resolved_mesh())
    if problem.spec.scalar:
        raise ConfigurationError(f"{cfg.problem} is a scalar problem; run it from scripts/")
    system = MHDSystem(problem, cfg.solver())
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    state = system.initial_state()
    t_final = cfg.resolved_t_final()
    log.info("%s mesh=%s scheme=%s t_final=%g", cfg.problem, problem.grid.n, cfg.scheme, t_final)
    records = [system.record(state, 0, 0.0)]

    def on_step(r):
        records.append(r)
        log.info("step %d t=%.6g dt=%.3g divB=%.3g min_p=%.4g", r.step, r.t, r.dt, r.max_divB, r.min_p)

    try:
        result = advance_to(system, state, t_final, on_step=on_step)
    except PositivityError:
        # keep the series up to the failure for post-mortem
        write_series(out / "diagnostics.csv", records)
        raise
    write_series(out / "diagnostics.csv", result.log)
    final = result.state
    q, a = final.q, final.a
    extra = {"schlieren_abs_grad_log_rho": schlieren(q, problem.grid)} if problem.grid.ndim > 1 else None
    write_fields(q, a, problem.grid, cfg.format, out / f"fields.{cfg.format}", problem.gamma, extra)
    if problem.grid.ndim > 1:
        axis = cfg.slice_axis
        pos = cfg.slice_position
        if pos is None:
            pos = 0.5 * (problem.spec.lower[axis] + problem.spec.upper[axis])
        header, rows = slice_extract(q, a, problem.grid, axis, pos, problem.gamma)
        write_csv(out / "slice.csv", header, rows)
    return result


def _add_run_args(p):
    p.add_argument("--config", help="key = value file; flags below override it")
    p.add_argument("--problem", choices=sorted(PROBLEMS))
    p.add_argument("--mesh", help="NX[,NY[,NZ]]")
    p.add_argument("--tfinal", type=float)
    p.add_argument("--cfl", type=float)
    p.add_argument("--scheme", choices=["base", "ct"])
    p.add_argument("--energy", choices=["conserve", "pressure"])
    p.add_argument("--nu", type=float)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "vtk"])
    p.add_argument("--diag-every", type=int, dest="diag_every")
    p.add_argument("--max-steps", type=int, dest="max_steps")
    p.add_argument("--slice-axis", type=int, dest="slice_axis")
    p.add_argument("--slice-position", type=float, dest="slice_position")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wenoct", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run_args(sub.add_parser("run", help="advance one problem to t_final"))
    c = sub.add_parser("converge", help="mesh-doubling study with EOC table")
    c.add_argument("--problem", required=True, choices=["alfven2d", "alfven3d"])
    c.add_argument("--levels", type=int, default=3)
    c.add_argument("--mesh", help="coarsest mesh (default: problem default)")
    c.add_argument("--cfl", type=float, default=3.0)
    c.add_argument("--out", default="out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s"
    )
    try:
        if args.command == "run":
            overrides = {
                k: getattr(args, k)
                for k in (
                    "problem", "mesh", "tfinal", "cfl", "scheme", "energy", "nu", "out",
                    "format", "diag_every", "max_steps", "slice_axis", "slice_position",
                )
            }
            cfg = build_config(args.config, **overrides)
            res = run(cfg)
            last = res.log[-1]
            print(
                f"{cfg.problem}: {res.steps} steps to t={res.state.t:.6g}, "
                f"max divB={max(r.max_divB for r in res.log):.3e}, "
                f"min p={min(r.min_p for r in res.log):.4g}, final min rho={last.min_rho:.4g}"
            )
        else:
            if args.cfl <= 0:
                raise ConfigurationError("cfl must be positive")
            mesh = parse_mesh(args.mesh) if args.mesh else None
            report = convergence_study(args.problem, args.levels, mesh, SolverConfig(cfl=args.cfl))
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            header, rows = report.rows()
            path = out / f"eoc_{args.problem}.csv"
            with path.open("w") as fh:
                fh.write(f"# {report.note}\n")
                fh.write(",".join(header) + "\n")
                for row in rows:
                    fh.write(",".join([row[0]] + [f"{v:.6e}" for v in row[1:]]) + "\n")
            print(path.read_text(), end="")
    except ConfigurationError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PositivityError, InvalidStateError) as exc:
        where = getattr(exc, "location", None)
        stage = getattr(exc, "stage", None)
        print(f"positivity failure: {exc} (location={where}, stage={stage})", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
