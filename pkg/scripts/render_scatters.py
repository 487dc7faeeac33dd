#!/usr/bin/env python3
"""Render SVG scatters of the instructive configurations.

Each output shows one of the structures discussed in the docs: the plain
two-generator lattice, the chaotic/regular mixed set, the regular
two-vector pattern, branching columns, the two-region split, the L-shape
family, the hexagonal projection of the 3-D unit-vector set, and one
cyclic-group set flattened to (x, residue).
"""

import argparse
import os

from ulamset import Bound, generate, validate_config
from ulamset.cli import export_svg, scatter_svg
from ulamset.cyclic import generate_cyclic

RUNS = [
    ("two_generators", [(1, 0), (0, 1)], Bound.box((25, 25)), "xy"),
    ("mixed_chaotic_regular", [(9, 0), (0, 9), (1, 13)], Bound.box((100, 100)), "xy"),
    ("regular_two_vectors", [(2, 5), (3, 1)], Bound.box((100, 100)), "xy"),
    ("branching_columns", [(1, 0), (2, 0), (0, 1)], Bound.box((60, 300)), "xy"),
    ("two_region_split", [(3, 0), (0, 1), (1, 1)], Bound.box((80, 80)), "xy"),
    ("l_shapes", [(1, 0), (0, 1), (6, 4)], Bound.box((80, 80)), "xy"),
    ("unit3d_hexagonal", [(1, 0, 0), (0, 1, 0), (0, 0, 1)], Bound.level(60),
     "complement"),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    for name, init, bound, projection in RUNS:
        cfg = validate_config(init, len(init[0]))
        uset = generate(cfg, bound)
        path = os.path.join(args.outdir, f"{name}.svg")
        export_svg(uset, path, projection=projection)
        print(f"{path}: {len(uset)} points")

    cset = generate_cyclic([(1, 3), (3, 4)], 6, 92)
    path = os.path.join(args.outdir, "cyclic_mod6.svg")
    scatter_svg(cset.points, 2, path)
    print(f"{path}: {len(cset)} points")


if __name__ == "__main__":
    main()
