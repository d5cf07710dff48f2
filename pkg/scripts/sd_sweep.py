"""Exhaustive SD check over a grid of small (r, n, m), fields and M_p rings.

    python scripts/sd_sweep.py [--rmax 4] [--nmax 6] [--jobs 1]
"""

import argparse
import time
import warnings

from pmdscodes import CodeParams, field_new, ring_new
from pmdscodes.verify import verify


def smallest_field(span):
    return field_new(next(w for w in range(2, 33) if (1 << w) - 1 >= span))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rmax", type=int, default=4)
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--primes", default="17,23,29")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    primes = [int(p) for p in args.primes.split(",")]

    print("%-6s %-4s %-4s %-18s %-8s %s" % ("r", "n", "m", "algebra", "patterns", "verdict"))
    failures = 0
    for r in range(2, args.rmax + 1):
        for n in range(4, args.nmax + 1):
            for m in range(1, n - 1):
                algebras = [smallest_field(r * n)] + [ring_new(p) for p in primes if r * n <= p - 1]
                for alg in algebras:
                    t0 = time.perf_counter()
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        rep = verify(CodeParams(r, n, m, "sd", alg), "sd", jobs=args.jobs)
                    failures += not rep.passed
                    print("%-6d %-4d %-4d %-18s %-8d %s (%.2fs)" % (
                        r, n, m, alg.name, rep.patterns_checked, "PASS" if rep.passed else "FAIL",
                        time.perf_counter() - t0))
    print("# failures: %d" % failures)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
