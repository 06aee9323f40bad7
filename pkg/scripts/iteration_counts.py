"""Newton iteration counts as the target approaches the fully coherent regime.

Sweeps alpha = 1 - 10^-k for the Hamiltonian-simulation targets alpha cos(tau x)
and alpha sin(tau x).  Writes CSV: target,degree,alpha,iterations,residual_l1,wall_s.
"""

import argparse
import csv
import sys

from qspnewton import SolverConfig, jacobi_anger_cos, jacobi_anger_sin, newton_solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau", type=float, nargs="+", default=[100.0, 1000.0])
    ap.add_argument("--exponents", type=int, nargs="+", default=[1, 2, 3, 5, 7, 9])
    ap.add_argument("--tol", type=float, default=1e-12)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    w = csv.writer(args.out)
    w.writerow(["target", "degree", "alpha", "iterations", "residual_l1", "wall_s"])
    for tau in args.tau:
        for name, build in (("cos", jacobi_anger_cos), ("sin", jacobi_anger_sin)):
            for k in args.exponents:
                alpha = 1.0 - 10.0**-k
                c = build(tau, 1e-14, alpha)
                _, rep = newton_solve(c, SolverConfig(residual_tol=args.tol))
                w.writerow([f"{name}:tau={tau:g}", c.degree, repr(alpha), rep.iterations,
                            repr(rep.residual), f"{rep.wall_time:.3f}"])
                args.out.flush()


if __name__ == "__main__":
    main()
