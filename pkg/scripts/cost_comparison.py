"""Oracle calls of the binary search vs the shot budget of sampling, across n and delta_e.

Counts only; no states are simulated. Per-amplitude search costs
m = iters_for_error(delta_e) calls; all 2^n amplitudes cost m * 2^n; a
product state costs m * n. Sampling needs ceil(2^n / delta_e^2) shots.

    python scripts/cost_comparison.py --max-n 20 > costs.csv
"""
import argparse
import csv
import sys

from ampbisect.baseline import required_shots
from ampbisect.bisection import iters_for_error


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--errors", type=float, nargs="+", default=[1e-2, 1e-3, 1e-6])
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n_qubits", "delta_e", "m", "calls_one_amplitude", "calls_all_amplitudes",
                     "calls_product_state", "sampling_shots", "shots_per_call_all"])
    for d in args.errors:
        m = iters_for_error(d)
        for n in range(1, args.max_n + 1):
            shots = required_shots(n, d)
            writer.writerow([n, f"{d:.17g}", m, m, m * 2 ** n, m * n, shots, f"{shots / (m * 2 ** n):.17g}"])


if __name__ == "__main__":
    main()
