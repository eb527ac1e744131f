"""Reliability curves for perfect and imperfect switching (Fig. 2 data), with an MC estimate of the exact imperfect system.

    python scripts/reliability_curves.py [out.csv] [--reps N]
"""
import argparse
import csv
import sys

from gldstandby.gld import REFERENCE_COMPONENT, REFERENCE_SWITCH
from gldstandby.mcsim import SimConfig, simulate_imperfect
from gldstandby.sysrel import Imperfect, SystemConfig, reliability_curve, time_grid

NS = (2, 5, 10, 20)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", nargs="?")
    ap.add_argument("--reps", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    grid = time_grid(100.0, 101)
    header = ["t"]
    cols = []
    for n in NS:
        cfg = SystemConfig(n, REFERENCE_COMPONENT, Imperfect(REFERENCE_SWITCH))
        perfect = reliability_curve(cfg, grid)
        lower = reliability_curve(cfg, grid, lower_bound=True)
        sim = simulate_imperfect(cfg, SimConfig(args.reps, args.seed + n, tuple(grid)))
        header += [f"perfect_n{n}", f"lower_n{n}", f"mc_imperfect_n{n}"]
        cols += [perfect.values, lower.values, [r.estimate for r in sim.estimates]]

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for i, t in enumerate(grid):
        w.writerow([f"{t:g}"] + [f"{c[i]:.10g}" for c in cols])
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
