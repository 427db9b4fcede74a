"""Closed form vs brute-force enumeration over a range of polygon orders.

    python scripts/oracle_sweep.py --kmin 3 --kmax 40 --limit 1e10
"""

import argparse
import time

from kgonal.oracle import compare


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--kmin", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("--limit", type=float, default=1e8)
    args = ap.parse_args()

    limit = int(args.limit)
    bad = 0
    for k in range(args.kmin, args.kmax + 1):
        t0 = time.perf_counter()
        rep = compare(k, limit)
        print(f"{rep.summary():<60} {time.perf_counter() - t0:7.3f}s")
        bad += not rep.closed_form_agreement
    print(f"{bad} disagreeing orders")


if __name__ == "__main__":
    main()
