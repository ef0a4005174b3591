#!/usr/bin/env python3
"""Tabulate Cayley-ball growth and bounded palindromic-length histograms.

Example:
    python3 scripts/ball_census.py --group heis --radius 6
    python3 scripts/ball_census.py --group wreath --radius 5 --max-len 6 --max-factors 3
"""

import argparse
import sys

sys.path.insert(0, "src")

from palwidth import baumslag, heisenberg, wreath
from palwidth.search import ball_table, pal_length_histogram


def evaluator_for(label):
    if label == "wreath":
        return wreath.evaluator()
    if label == "heis":
        return heisenberg.evaluator()
    if label.startswith("bs:"):
        return baumslag.evaluator(int(label.split(":", 1)[1]))
    raise SystemExit(f"unknown group {label!r}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--group", default="heis")
    parser.add_argument("--radius", type=int, default=5)
    parser.add_argument("--max-len", type=int, default=None)
    parser.add_argument("--max-factors", type=int, default=None)
    parser.add_argument("--budget", type=int, default=2_000_000)
    args = parser.parse_args()
    ev = evaluator_for(args.group)

    print(f"# ball growth, group={args.group}")
    print("radius,elements")
    for r in range(args.radius + 1):
        print(f"{r},{len(ball_table(ev, r, max_states=args.budget))}")

    if args.max_len is not None and args.max_factors is not None:
        hist = pal_length_histogram(
            ev, args.radius, args.max_factors, args.max_len, max_states=args.budget
        )
        print(f"# palindromic length within radius {args.radius}, "
              f"factors <= {args.max_factors}, palindrome length <= {args.max_len}")
        print("pal_length,count")
        for key, count in hist.items():
            print(f"{key},{count}")


if __name__ == "__main__":
    main()
