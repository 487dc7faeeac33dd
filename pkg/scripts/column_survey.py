#!/usr/bin/env python3
"""Survey column periodicity for planar configurations with a y-axis seed.

Defaults cover the two instructive cases: the classical sequence augmented
by (0,1), whose nonempty columns all have period at most 2, and the
(2,0),(3,0),(0,1) configuration whose column periods double repeatedly
(1, 2, 4, 8 within x <= 70).
"""

import argparse
import time

from ulamset import Bound, generate, validate_config
from ulamset.cli import parse_point_list
from ulamset.columns import columns_report

DEFAULT_RUNS = [
    ("(1,0),(2,0),(0,1)", (60, 2000)),
    ("(2,0),(3,0),(0,1)", (70, 3000)),
]


def survey(init: str, box) -> None:
    cfg = validate_config(parse_point_list(init), 2)
    t0 = time.perf_counter()
    uset = generate(cfg, Bound.box(box))
    rep = columns_report(uset)
    dt = time.perf_counter() - t0
    print(f"\n== {init} on box {box}: {len(uset)} points [{dt:.1f}s]")
    print(f"nonempty columns: {rep.nonempty_indices()}")
    byp = {}
    for p in rep.profiles:
        byp.setdefault(p.period, []).append(p.index)
    for period in sorted(byp):
        xs = sorted(set(byp[period]))
        head = ", ".join(map(str, xs[:14])) + ("..." if len(xs) > 14 else "")
        print(f"period {period:>3}: {len(xs)} columns ({head})")
    if rep.inconclusive:
        print(f"inconclusive: {rep.inconclusive}")
    for v in rep.violations:
        print(f"VIOLATION: {v}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--init", help="configuration, e.g. \"(1,0),(2,0),(0,1)\"")
    ap.add_argument("--box", help="box limits, e.g. 60,2000")
    args = ap.parse_args()

    if args.init:
        box = tuple(int(t) for t in args.box.split(","))
        survey(args.init, box)
    else:
        for init, box in DEFAULT_RUNS:
            survey(init, box)


if __name__ == "__main__":
    main()
