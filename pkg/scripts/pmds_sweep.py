"""PMDS property of the modified construction, and of the plain SD construction for contrast.

The plain construction is checked over the same field so the only difference
is the stride of the last parity-check row (n versus N).

    python scripts/pmds_sweep.py
"""

import argparse
import warnings

from pmdscodes import CodeParams, field_new
from pmdscodes.verify import verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    grid = [(2, 4, 1), (3, 4, 1), (2, 5, 1), (3, 5, 1), (4, 5, 1), (2, 5, 2), (3, 5, 2), (2, 6, 1), (2, 6, 2), (3, 6, 3)]
    print("%-3s %-3s %-3s %-3s %-12s %-24s %s" % ("r", "n", "m", "N", "field", "modified (pmds)", "plain (sd) as PMDS"))
    bad = 0
    for r, n, m in grid:
        N = (m + 1) * (n - m - 1) + 1
        w = next(w for w in range(2, 33) if (1 << w) - 1 >= r * N)
        F = field_new(w)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mod = verify(CodeParams(r, n, m, "pmds", F), "pmds", jobs=args.jobs)
            plain = verify(CodeParams(r, n, m, "sd", F), "pmds", jobs=args.jobs)
        bad += not mod.passed
        cx = "" if plain.passed else " first failure: " + plain.counterexample.to_text()
        print("%-3d %-3d %-3d %-3d %-12s %-24s %s%s" % (
            r, n, m, N, F.name, mod.summary(), plain.summary(), cx))
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
