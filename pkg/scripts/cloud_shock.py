"""Cloud-shock interaction: 2D scalar-potential vs 2.5D vector-potential CT, plus a 3D smoke run."""

import argparse
import time

from wenoct.experiments import cloud_2d_vs_25d, run_problem
from wenoct.timestepper import SolverConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--n3d", type=int, default=32)
    ap.add_argument("--tfinal", type=float, default=0.06)
    ap.add_argument("--nu", type=float, default=0.1)
    ap.add_argument("--skip-3d", action="store_true")
    args = ap.parse_args()

    diff = cloud_2d_vs_25d((args.n, args.n), args.tfinal, args.nu)
    print("max |2D - 2.5D|: " + "  ".join(f"{k}={v:.3e}" for k, v in diff.items()))
    if not args.skip_3d:
        t0 = time.time()
        _, res = run_problem(
            "cloud_shock_3d", (args.n3d,) * 3, SolverConfig(nu=args.nu), args.tfinal
        )
        print(
            f"3D: {res.steps} steps, max div B={max(r.max_divB for r in res.log):.2e}, "
            f"min p={min(r.min_p for r in res.log):.3f}, {time.time() - t0:.0f}s"
        )


if __name__ == "__main__":
    main()
