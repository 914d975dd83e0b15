"""Closed-form counting of balanced words by Parikh vector, with oracles.

Every balanced word with a zeros and b ones arises, for a unique coprime
pair (alpha, beta), as a length-(a+b) factor of the periodic repetition of
the lower Christoffel word of slope beta/alpha with minimal period
alpha+beta.  Summing the per-pair factor counts, split into light and
heavy height classes, gives the total.

All arithmetic is exact: floors and ceilings of beta*k/(alpha+beta) are
integer divisions, and range bounds are compared by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .balance import enumerate_balanced
from .christoffel import lower_christoffel
from .words import smallest_period


@dataclass(frozen=True)
class PeriodClassParams:
    """Derived constants for a coprime pair: inverses mod alpha+beta and the slope ratio."""

    alpha: int
    beta: int
    alpha_inv: int
    beta_inv: int
    sigma: Fraction

    @classmethod
    def for_pair(cls, alpha: int, beta: int) -> "PeriodClassParams":
        if alpha < 1 or beta < 1 or gcd(alpha, beta) != 1:
            raise ValueError(f"({alpha},{beta}) must be coprime positive integers")
        m = alpha + beta
        ai, bi = pow(alpha, -1, m), pow(beta, -1, m)
        assert ai + bi == m
        return cls(alpha, beta, ai, bi, Fraction(beta, m))


@dataclass(frozen=True)
class CountTerm:
    alpha: int
    beta: int
    kind: str  # "heavy" | "light"
    n_value: int
    h_value: int
    contribution: int


@dataclass(frozen=True)
class CountReport:
    """Audit decomposition of the balanced-word count for one Parikh vector."""

    a: int
    b: int
    terms: tuple[CountTerm, ...]
    total: int

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "terms": [
                {
                    "alpha": t.alpha,
                    "beta": t.beta,
                    "kind": t.kind,
                    "N": t.n_value,
                    "H": t.h_value,
                    "contribution": t.contribution,
                }
                for t in self.terms
            ],
            "total": self.total,
        }


def prefix_height_lower(alpha: int, beta: int, k: int) -> int:
    """Ones in the length-k prefix of the repeated lower Christoffel word."""
    if k < 0:
        raise ValueError("prefix length must be >= 0")
    return beta * k // (alpha + beta)


def prefix_height_upper(alpha: int, beta: int, k: int) -> int:
    """Ones in the length-k prefix of the repeated upper Christoffel word."""
    if k < 0:
        raise ValueError("prefix length must be >= 0")
    return -((-beta * k) // (alpha + beta))


def count_period_factors(alpha: int, beta: int, n: int) -> int:
    """Number of length-n factors of the periodic word of slope beta/alpha
    whose minimal period is exactly alpha+beta.

    Zero unless the pair is coprime and n reaches a full period; then
    controlled by the inverses alpha', beta' of alpha, beta mod alpha+beta:
    2(n-alpha-beta+1) below alpha+beta+min(alpha',beta'), then
    n-max(alpha',beta')+1 up to alpha+beta+max(alpha',beta'), then the
    full count alpha+beta.
    """
    if alpha < 1 or beta < 1 or n < 0:
        raise ValueError("need alpha,beta >= 1 and n >= 0")
    m = alpha + beta
    if gcd(alpha, beta) > 1 or n < m:
        return 0
    ai, bi = pow(alpha, -1, m), pow(beta, -1, m)
    if n < m + min(ai, bi):
        return 2 * (n - m + 1)
    if n < m + max(ai, bi):
        return n - max(ai, bi) + 1
    return m


def count_heavy_occurrences(alpha: int, beta: int, n: int) -> int:
    """Occurrences of heavy length-n factors in any window of alpha+beta+n-1
    consecutive letters of the periodic word: n*beta mod (alpha+beta)."""
    if gcd(alpha, beta) != 1:
        raise ValueError(f"({alpha},{beta}) must be coprime")
    if n < 0:
        raise ValueError("n must be >= 0")
    return n * beta % (alpha + beta)


def count_heavy_factors(alpha: int, beta: int, n: int) -> int:
    """Number of heavy length-n factors of minimal period alpha+beta.

    Outside the periodic regime the count is a height sum: total heights
    of the qualifying factors minus floor(sigma*n) per factor, where
    sigma = beta/(alpha+beta).  The summation limits depend on where
    n-alpha-beta falls relative to the inverses alpha', beta'; for large n
    the count stabilizes at n*beta mod (alpha+beta).
    """
    nn = count_period_factors(alpha, beta, n)
    if nn == 0:
        return 0
    m = alpha + beta
    ai, bi = pow(alpha, -1, m), pow(beta, -1, m)

    def fl(k: int) -> int:
        return beta * k // m

    def ce(k: int) -> int:
        return -((-beta * k) // m)

    if n < m + min(ai, bi):
        s = sum(ce(n - i) + fl(i) for i in range(n - m + 1))
        return 2 * s - fl(n) * nn
    if m + bi <= n < m + ai:
        s = sum(fl(n - i) + ce(i) for i in range(n - ai + 1))
        return s - fl(n) * nn
    if m + ai <= n < m + bi:
        s = sum(ce(n - i) + fl(i) for i in range(n - bi + 1))
        return s - fl(n) * nn
    return n * beta % m


def periodic_window(alpha: int, beta: int, length: int, offset: int = 0) -> str:
    """A window of the infinite repetition of the lower Christoffel word."""
    w = lower_christoffel(alpha, beta)
    reps = (offset + length) // len(w) + 2
    return (w * reps)[offset : offset + length]


def brute_period_factors(alpha: int, beta: int, n: int) -> set[str]:
    """Oracle for count_period_factors by direct window enumeration."""
    if alpha < 1 or beta < 1 or n < 0:
        raise ValueError("need alpha,beta >= 1 and n >= 0")
    if n == 0:
        return set()
    m = alpha + beta
    window = periodic_window(alpha, beta, n + 2 * m)
    return {
        window[i : i + n]
        for i in range(len(window) - n + 1)
        if smallest_period(window[i : i + n]) == m
    }


def brute_heavy_factors(alpha: int, beta: int, n: int) -> set[str]:
    """Oracle for count_heavy_factors: the period factors with the larger
    ones-count, when two counts occur."""
    if gcd(alpha, beta) != 1:
        raise ValueError(f"({alpha},{beta}) must be coprime")
    m = alpha + beta
    if beta * n % m == 0:
        return set()
    heavy_ones = prefix_height_upper(alpha, beta, n)
    return {u for u in brute_period_factors(alpha, beta, n) if u.count("1") == heavy_ones}


def _term_ranges(a: int, b: int):
    """Index pairs of the two sums: heavy terms over alpha, light over beta.

    Heavy: 1 <= alpha <= a and (b-1)*alpha/(a+1) < beta <= b*alpha/a.
    Light: 1 <= beta <= b and (a-1)*beta/(b+1) < alpha <= a*beta/b.
    Bounds are evaluated on integers (strict left, inclusive right).
    """
    heavy = []
    for alpha in range(1, a + 1):
        lo = (b - 1) * alpha // (a + 1) + 1
        hi = b * alpha // a
        heavy.extend((alpha, beta) for beta in range(lo, hi + 1))
    light = []
    for beta in range(1, b + 1):
        lo = (a - 1) * beta // (b + 1) + 1
        hi = a * beta // b
        light.extend((alpha, beta) for alpha in range(lo, hi + 1))
    return heavy, light


def count_balanced_report(a: int, b: int) -> CountReport:
    """Balanced-word count for Parikh vector (a, b) with its term breakdown."""
    if a < 0 or b < 0:
        raise ValueError("need a,b >= 0")
    if a == 0 or b == 0:
        return CountReport(a, b, (), 1)
    n = a + b
    heavy, light = _term_ranges(a, b)
    terms = []
    for alpha, beta in heavy:
        nv, hv = count_period_factors(alpha, beta, n), count_heavy_factors(alpha, beta, n)
        terms.append(CountTerm(alpha, beta, "heavy", nv, hv, hv))
    for alpha, beta in light:
        nv, hv = count_period_factors(alpha, beta, n), count_heavy_factors(alpha, beta, n)
        terms.append(CountTerm(alpha, beta, "light", nv, hv, nv - hv))
    return CountReport(a, b, tuple(terms), sum(t.contribution for t in terms))


def count_balanced(a: int, b: int) -> int:
    """Number of balanced words with a zeros and b ones; 1 when either is 0."""
    return count_balanced_report(a, b).total


def brute_count_balanced(a: int, b: int, cap: int = 20) -> int:
    """Oracle for count_balanced via full enumeration; refuses a+b > cap."""
    if a + b > cap:
        raise ValueError(f"a+b={a + b} exceeds the enumeration cap {cap}")
    return len(enumerate_balanced(a, b))
