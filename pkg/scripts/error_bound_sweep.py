"""Worst observed angle error of the binary search against pi/2^(m+1).

    python scripts/error_bound_sweep.py --samples 2000 --max-m 30 > sweep.csv
"""
import argparse
import csv
import math
import sys

import numpy as np

from ampbisect.bisection import SearchConfig, bound_for_iters, search_single
from ampbisect.statevector import prepare_from_angle


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--max-m", type=int, default=24)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--init", choices=("midpoint", "random"), default="midpoint")
    args = parser.parse_args()

    alphas = np.random.default_rng(args.seed).uniform(0.0, math.pi / 2, args.samples)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["m", "init", "max_error", "mean_error", "bound", "guaranteed_bound"])
    for m in range(1, args.max_m + 1):
        errs = []
        for i, a in enumerate(alphas):
            cfg = SearchConfig(iterations=m, init=args.init, seed=args.seed + i if args.init == "random" else None)
            errs.append(abs(search_single(prepare_from_angle(a), cfg).theta_hat - a))
        writer.writerow([m, args.init, f"{max(errs):.17g}", f"{np.mean(errs):.17g}",
                         f"{bound_for_iters(m):.17g}", f"{cfg.guaranteed_bound():.17g}"])


if __name__ == "__main__":
    main()
