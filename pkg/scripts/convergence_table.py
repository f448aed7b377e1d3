"""Tabulate exact class totals against the asymptotic estimate.

Prints one row per n: the bit length of the exact count, the estimate in
scientific notation, and the certified exact/estimate ratio.  The ratio
drifts down toward 1; the bracket column shows the certified enclosure so
the monotone trend is visible beyond doubt, not just to the printed digits.

    python3 scripts/convergence_table.py --ns 50,100,200,400,1000 --digits 10
"""

import argparse
import csv
import sys

from f2cholesky.asymptotics import asymptotic_estimate, convergence_report
from f2cholesky.bounded import sci_string


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--ns", default="50,100,200,400,1000",
        help="comma-separated sizes (default 50,100,200,400,1000)",
    )
    parser.add_argument("--digits", type=int, default=10,
                        help="ratio precision request (default 10)")
    parser.add_argument("--csv", action="store_true",
                        help="emit csv instead of an aligned table")
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    ns = [int(t) for t in args.ns.replace(",", " ").split()]
    rows = convergence_report(ns, digits=args.digits)
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "exact_bits", "estimate", "ratio_lo", "ratio_hi"])
        for r in rows:
            est = asymptotic_estimate(r.n, args.digits)
            writer.writerow([
                r.n,
                r.exact.bit_length(),
                sci_string(est.value, args.digits),
                f"{float(r.ratio.lo):.12f}",
                f"{float(r.ratio.hi):.12f}",
            ])
        return 0
    print(f"{'n':>6}  {'exact bits':>10}  {'estimate':>18}  {'ratio':>14}  bracket")
    for r in rows:
        est = asymptotic_estimate(r.n, args.digits)
        lo, hi = r.ratio.lo, r.ratio.hi
        bracket = f"[{float(lo):.10f}, {float(hi):.10f}]"
        print(f"{r.n:>6}  {r.exact.bit_length():>10}  "
              f"{sci_string(est.value, 8):>18}  {r.ratio.decimal(10):>14}  {bracket}")
    decreasing = all(a.ratio.lo > b.ratio.hi for a, b in zip(rows, rows[1:]))
    print(f"strictly decreasing: {'yes' if decreasing else 'NO'}")
    return 0 if decreasing else 1


if __name__ == "__main__":
    sys.exit(main())
