"""Digits of N_i against i, and the ratio N_{i+1}/N_i -> alpha^2."""

import argparse
from math import log10, sqrt

from kgonal.intersect import iter_records

ap = argparse.ArgumentParser()
ap.add_argument("--k", type=int, default=3)
ap.add_argument("--terms", type=int, default=25)
args = ap.parse_args()

alpha_sq = (args.k - 1 + sqrt(args.k * (args.k - 2))) ** 2
prev = None
for rec in iter_records(args.k):
    if rec.i >= args.terms:
        break
    ratio = "" if prev is None else f"{rec.value / prev:.10f}"
    print(f"{rec.i:4d} {len(str(rec.value)):6d} digits  {ratio}")
    prev = rec.value
print(f"alpha^2 = {alpha_sq:.10f}  (log10 {log10(alpha_sq):.4f} digits per term)")
