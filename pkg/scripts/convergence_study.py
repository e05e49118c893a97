#!/usr/bin/env python3
"""Error of the alpha-p DTM solutions as the truncation order and alpha vary.

Writes two CSV tables into --outdir:
  bvp_convergence.csv  alpha,order,sup_norm_error   (y'' + y = 0, y(0)=0, y(1)=1)
  eig_convergence.csv  alpha,order,lambda_hat,rel_err   (Robin problem, first eigenvalue)
"""
import argparse
import csv
import math
from fractions import Fraction
from pathlib import Path

from alphadtm.bvp import BoundaryCondition, LinearOde2, error_report, solve_bvp
from alphadtm.eig import EigProblem, solve_eig
from alphadtm.exact import ROBIN, dirichlet_solution, exact_eigenvalues
from alphadtm.transform import UNIT

ALPHAS = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]


def bvp_table(orders):
    bc1, bc2 = BoundaryCondition("left", 1), BoundaryCondition("right", 1, 0, 1)
    oracle = lambda x: dirichlet_solution(1.0, x)
    for alpha in ALPHAS:
        for N in orders:
            sol = solve_bvp(LinearOde2(q=1), bc1, bc2, alpha, UNIT, N)
            yield alpha, N, error_report(sol, oracle, 101).sup_norm


def eig_table(orders):
    lam1 = exact_eigenvalues(ROBIN, 2.0, 3.0).roots[0].lam
    for alpha in ALPHAS:
        for N in orders:
            pairs = solve_eig(EigProblem(1, 1, 1, -1, alpha, N), (0, 50))
            positive = [p.lambda_hat for p in pairs if p.lambda_hat > 0]
            lam = positive[0] if positive else math.nan
            yield alpha, N, lam, abs(lam - lam1) / lam1


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--max-order", type=int, default=20)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    orders = range(4, args.max_order + 1, 2)

    with open(out / "bvp_convergence.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["alpha", "order", "sup_norm_error"])
        for alpha, N, err in bvp_table(orders):
            w.writerow([str(alpha), N, f"{err:.17g}"])

    with open(out / "eig_convergence.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["alpha", "order", "lambda_hat", "rel_err"])
        for alpha, N, lam, rel in eig_table(orders):
            w.writerow([str(alpha), N, f"{lam:.17g}", f"{rel:.17g}"])
            print(f"alpha={str(alpha):>4} N={N:2d}  lambda_hat={lam:.12f}  rel_err={rel:.3e}")


if __name__ == "__main__":
    main()
