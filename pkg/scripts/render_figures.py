#!/usr/bin/env python3
"""Write the alcove figures as SVG files: length-colored tilings for the
rank-2 types and the coroot-class pictures for A2, B2, and G2.

Usage: python3 scripts/render_figures.py [--radius R] [--outdir DIR]
"""

import argparse
import pathlib

from coxlen.render import render_alcoves, render_classes
from coxlen.rootsys import root_system


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=int, default=3, help="tiling radius (default 3)")
    ap.add_argument("--outdir", default="figures", help="output directory (default figures/)")
    args = ap.parse_args(argv)
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for name in ("A2", "B2", "C2", "G2"):
        rs = root_system(name)
        path = outdir / f"alcoves_{name}_r{args.radius}.svg"
        path.write_text(render_alcoves(rs, radius=args.radius))
        print(f"wrote {path}")

    for name in ("A2", "B2", "G2"):
        rs = root_system(name)
        path = outdir / f"classes_{name}.svg"
        path.write_text(render_classes(rs, coeff_radius=2, tiling_radius=args.radius))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
