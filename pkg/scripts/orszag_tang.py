"""Orszag-Tang vortex with and without constrained transport.

The base run may lose pressure positivity; its failure time is reported
rather than treated as an error.
"""

import argparse
from pathlib import Path

from wenoct.experiments import run_problem
from wenoct.io import slice_extract, write_csv, write_series
from wenoct.physics import InvalidStateError, PositivityError
from wenoct.timestepper import SolverConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=96)
    ap.add_argument("--tfinal", type=float, default=3.0)
    ap.add_argument("--out", default="out/orszag_tang")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for scheme in ("ct", "base"):
        records = []
        try:
            problem, res = run_problem(
                "orszag_tang", (args.n, args.n), SolverConfig(scheme=scheme), args.tfinal,
                on_step=records.append,
            )
        except (PositivityError, InvalidStateError):
            t_fail = records[-1].t if records else 0.0
            print(f"{scheme}: positivity lost after t={t_fail:.4f}")
            if records:
                write_series(out / f"diagnostics_{scheme}.csv", records)
            continue
        write_series(out / f"diagnostics_{scheme}.csv", res.log)
        header, rows = slice_extract(res.state.q, res.state.a, problem.grid, 1, 0.625 * 3.141592653589793)
        write_csv(out / f"slice_{scheme}.csv", header, rows)
        print(
            f"{scheme}: {res.steps} steps to t={res.state.t:.3f}, "
            f"min p={min(r.min_p for r in res.log):.4f}, "
            f"max div B={max(r.max_divB for r in res.log):.2e}"
        )


if __name__ == "__main__":
    main()
