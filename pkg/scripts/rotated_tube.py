"""Rotated shock tube: CT and base runs against an axis-aligned 1D reference."""

import argparse
import time

from wenoct.config import parse_mesh
from wenoct.experiments import rotated_tube_comparison


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mesh", default="180,150")
    ap.add_argument("--tfinal", type=float, default=0.2)
    ap.add_argument("--nref", type=int, default=2000)
    args = ap.parse_args()

    t0 = time.time()
    cmp = rotated_tube_comparison(parse_mesh(args.mesh), args.tfinal, args.nref)
    print("L1 error of the CT cut along y = 0:")
    for k, v in cmp.l1.items():
        print(f"  {k:6s} {v:.5f}")
    print(f"TV(B_perp) along y = 0: base={cmp.tv_bperp_base:.4f}  ct={cmp.tv_bperp_ct:.4f}")
    print(f"max div B: base={cmp.max_div_base:.3e}  ct={cmp.max_div_ct:.3e}")
    print(f"{time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
