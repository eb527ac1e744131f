"""Hazard curves for representative parameter sets: constant, increasing, decreasing, bathtub."""
import csv
import sys

import numpy as np

from gldstandby.gld import GldParams, hazard

CASES = {
    "constant(1,1)": GldParams(1.0, 1.0, 1.0),
    "increasing(2,3)": GldParams(2.0, 3.0, 1.0, 1.5, 2.2),
    "decreasing(0.3,0.6)": GldParams(0.3, 0.6, 1.0, 1.5, 2.2),
    "bathtub(0.5,3)": GldParams(0.5, 3.0, 1.0),
}


def main():
    grid = np.geomspace(1e-2, 10, 120)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["t", *CASES])
    for t in grid:
        w.writerow([f"{t:.6g}"] + [f"{hazard(p, t):.10g}" for p in CASES.values()])


if __name__ == "__main__":
    main()
