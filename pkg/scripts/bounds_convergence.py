#!/usr/bin/env python3
"""Capacity bound table for the open regime (k2 > k1 >= 3).

Writes the CSV k1,lower_bits,upper_bits and prints the shrinking gap, the
convergence picture as the input window widens.
"""

import argparse
import sys

from zecap import bounds_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=int, default=3)
    parser.add_argument("--to", dest="stop", type=int, default=12)
    parser.add_argument("--out", help="also write the CSV here")
    args = parser.parse_args()

    rows = bounds_table(args.start, args.stop)
    lines = ["k1,lower_bits,upper_bits"]
    lines += [f"{k1},{lower:.12g},{upper:.12g}" for k1, lower, upper in rows]
    csv_text = "\n".join(lines) + "\n"
    sys.stdout.write(csv_text)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(csv_text)
    for k1, lower, upper in rows:
        print(f"# k1={k1:2d}  gap={upper - lower:.6f}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
