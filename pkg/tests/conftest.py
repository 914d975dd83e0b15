"""Shared brute-force oracles and word generators for the test suite.

The oracles here deliberately re-derive everything from first principles
(definition-level scans, full enumeration) so they stay independent of
the implementations they check.
"""

from __future__ import annotations

from math import gcd


def all_words(max_len: int, min_len: int = 0):
    """Every binary word with min_len <= |w| <= max_len, shortest first."""
    for n in range(min_len, max_len + 1):
        if n == 0:
            yield ""
            continue
        for bits in range(1 << n):
            yield format(bits, f"0{n}b")


def naive_is_balanced(w: str) -> bool:
    """Definition-level balance check comparing all equal-length factors."""
    n = len(w)
    for k in range(1, n + 1):
        counts = {w[i : i + k].count("1") for i in range(n - k + 1)}
        if max(counts) - min(counts) > 1:
            return False
    return True


def naive_smallest_period(w: str) -> int:
    """Letter-by-letter period scan."""
    n = len(w)
    for p in range(1, n + 1):
        if all(w[i] == w[i + p] for i in range(n - p)):
            return p
    raise AssertionError("unreachable")


def naive_is_prefix_normal(w: str) -> bool:
    n = len(w)
    for k in range(1, n + 1):
        prefix_zeros = w[:k].count("0")
        if any(w[i : i + k].count("0") > prefix_zeros for i in range(n - k + 1)):
            return False
    return True


def is_conjugate_of_reversal(w: str) -> bool:
    r = w[::-1]
    return any(w[i:] + w[:i] == r for i in range(len(w)))


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def complement(w: str) -> str:
    return w.translate(str.maketrans("01", "10"))
