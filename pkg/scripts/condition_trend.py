"""Condition number of DF at the Newton solution versus the target's sup-norm.

Writes CSV: target,degree,scale,iterations,cond_estimate,cond_svd.  The SVD
column is the exact 2-norm condition number, for comparison with the
power-iteration estimate.
"""

import argparse
import csv
import sys

import numpy as np

from qspnewton import SolverConfig, TargetSpec, build_target, jacobian_mps_real, newton_solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau", type=float, default=100.0)
    ap.add_argument("--scales", type=float, nargs="+", default=[0.5, 0.9, 0.99, 0.999, 0.9999])
    ap.add_argument("--gaussian", action="store_true", help="also run mu=0.5, sigma=0.05, degree 100")
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    specs = [TargetSpec("cos", tau=args.tau, scale=a) for a in args.scales]
    if args.gaussian:
        specs += [TargetSpec("gaussian", mu=0.5, sigma=0.05, degree=100, scale=a) for a in args.scales]
    w = csv.writer(args.out)
    w.writerow(["target", "degree", "scale", "iterations", "cond_estimate", "cond_svd"])
    for spec in specs:
        c = build_target(spec)
        phi, rep = newton_solve(c, SolverConfig(condition=True))
        exact = np.linalg.cond(jacobian_mps_real(phi))
        w.writerow([spec.label(), c.degree, spec.scale, rep.iterations,
                    f"{rep.condition_estimate:.12g}", f"{exact:.12g}"])


if __name__ == "__main__":
    main()
