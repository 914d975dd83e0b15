#!/usr/bin/env python3
"""Census of minimal forbidden words of the balanced language by length.

For each length: total count, count starting with 0 (always n - phi(n) - 1),
and how many of those are also minimal almost-balanced.
"""

import argparse
from math import gcd

from balwords.forbidden import enumerate_mab, enumerate_mf


def phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=24, help="largest length (default 24)")
    args = parser.parse_args()

    mab = set(enumerate_mab(args.max)) if args.max >= 2 else set()
    print(f"{'n':>4} {'total':>6} {'start0':>7} {'n-phi-1':>8} {'mab':>4}")
    for n in range(2, args.max + 1):
        found = enumerate_mf(n)
        zero_start = sum(1 for m in found if m.word.startswith("0"))
        in_mab = sum(1 for m in found if m.word in mab)
        print(f"{n:>4} {len(found):>6} {zero_start:>7} {n - phi(n) - 1:>8} {in_mab:>4}")


if __name__ == "__main__":
    main()
