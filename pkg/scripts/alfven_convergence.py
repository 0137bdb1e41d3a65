"""Mesh-doubling study of the oblique Alfven wave (2D or 3D)."""

import argparse

from wenoct.config import parse_mesh
from wenoct.convergence import convergence_study
from wenoct.timestepper import SolverConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, choices=[2, 3], default=2)
    ap.add_argument("--levels", type=int, default=3)
    ap.add_argument("--mesh", help="coarsest mesh, e.g. 16,32")
    ap.add_argument("--cfl", type=float, default=3.0)
    args = ap.parse_args()

    mesh = parse_mesh(args.mesh) if args.mesh else None
    rep = convergence_study(f"alfven{args.dim}d", args.levels, mesh, SolverConfig(cfl=args.cfl))
    print(f"# {rep.note}")
    names = list(rep.l2)
    print(f"{'mesh':>12s} " + " ".join(f"{n + ' L2':>11s} {n + ' Linf':>11s}" for n in names))
    for k, m in enumerate(rep.meshes):
        cells = " ".join(f"{rep.l2[n][k]:11.3e} {rep.linf[n][k]:11.3e}" for n in names)
        print(f"{'x'.join(map(str, m)):>12s} {cells}")
    for n in names:
        print(f"EOC {n}: L2 " + " ".join(f"{e:.3f}" for e in rep.eoc(n, "l2"))
              + " | Linf " + " ".join(f"{e:.3f}" for e in rep.eoc(n, "linf")))


if __name__ == "__main__":
    main()
