#!/usr/bin/env python3
"""Print the truncated characteristic polynomial of the Robin problem
y'' + lam y = 0, y(0) + y'(0) = 0, y(1) - y'(1) = 0, and its real roots."""
import argparse

from alphadtm.eig import EigProblem, characteristic_det, characteristic_entries, find_real_roots
from alphadtm.transform import as_rational

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--alpha", default="1/2")
ap.add_argument("--order", type=int, default=6)
ap.add_argument("--lambda-max", type=float, default=50.0)
args = ap.parse_args()

problem = EigProblem(1, 1, 1, -1, as_rational(args.alpha), args.order)
entries = characteristic_entries(problem)
for name, p in zip(("P11", "P12", "P21", "P22"), entries):
    print(f"{name} = {p}")
det = characteristic_det(entries)
print(f"det = {det}")
for r in find_real_roots(det, 0.0, args.lambda_max).roots:
    print(f"root {r.value:.12f}  bracket [{r.lo:.6g}, {r.hi:.6g}]  |P| = {r.residual:.2e}")
