"""Reliability sensitivity to each GLD parameter over the mission (Fig. 3 data).

    python scripts/reliability_sensitivity.py [--n 2] [out.csv]
"""
import argparse
import csv
import sys

from gldstandby.gld import REFERENCE_COMPONENT
from gldstandby.sensitivity import ParamId, reliability_partial
from gldstandby.sysrel import SystemConfig, time_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", nargs="?")
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--points", type=int, default=101)
    args = ap.parse_args()

    cfg = SystemConfig(args.n, REFERENCE_COMPONENT)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["t"] + [f"dR/d{p.value}" for p in ParamId])
    for t in time_grid(100.0, args.points):
        w.writerow([f"{t:g}"] + [f"{reliability_partial(cfg, t, p).value:.10g}" for p in ParamId])
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
