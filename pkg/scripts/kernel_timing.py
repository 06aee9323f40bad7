"""Wall time of F and DF in the real (SO(3)) and complex (SU(2)) kernels.

Writes CSV: dtilde,F_real_ms,F_complex_ms,jac_real_ms,jac_complex_ms
(median of --reps runs each).
"""

import argparse
import csv
import sys
import time

import numpy as np

from qspnewton import ReducedPhaseFactors, evaluate_F, jacobian_mps_complex, jacobian_mps_real


def median_ms(fn, reps):
    ts = []
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t)
    return 1e3 * float(np.median(ts))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 700, 1000])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    w = csv.writer(args.out)
    w.writerow(["dtilde", "F_real_ms", "F_complex_ms", "jac_real_ms", "jac_complex_ms"])
    for n in args.sizes:
        phi = ReducedPhaseFactors("even", rng.uniform(-np.pi, np.pi, n))
        row = [
            median_ms(lambda: evaluate_F(phi, "real"), args.reps),
            median_ms(lambda: evaluate_F(phi, "complex"), args.reps),
            median_ms(lambda: jacobian_mps_real(phi), args.reps),
            median_ms(lambda: jacobian_mps_complex(phi), args.reps),
        ]
        w.writerow([n] + [f"{v:.2f}" for v in row])
        args.out.flush()


if __name__ == "__main__":
    main()
