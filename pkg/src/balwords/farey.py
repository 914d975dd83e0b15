"""Prefixes of lower Christoffel words and the Farey correspondence.

The prefixes of lower Christoffel words (PLC) are exactly the words that
are both balanced and prefix normal.  Listing the length-n ones in
lexicographic order and mapping each to ones(root)/|root| of its
primitive root walks the Farey sequence of order n in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .balance import is_balanced, is_prefix_normal
from .christoffel import lower_christoffel
from .words import parikh


@dataclass(frozen=True)
class PlcEntry:
    word: str
    root: str
    fraction: Fraction


def is_plc(w: str) -> bool:
    """Whether w is a prefix of some lower Christoffel word."""
    if not w:
        raise ValueError("the empty word is not classified")
    return is_balanced(w) and is_prefix_normal(w)


def plc_root(v: str) -> str:
    """The primitive lower Christoffel word whose infinite power v prefixes.

    The root is the shortest prefix of v that is a primitive lower
    Christoffel word and reproduces v when repeated.
    """
    if not is_plc(v):
        raise ValueError(f"{v!r} is not a prefix of a lower Christoffel word")
    for m in range(1, len(v) + 1):
        r = v[:m]
        a, b = parikh(r)
        if gcd(a, b) != 1 or r != lower_christoffel(a, b):
            continue
        reps = len(v) // m + 1
        if (r * reps).startswith(v):
            return r
    raise RuntimeError(f"no primitive root found for {v!r}")


def enumerate_plc(n: int) -> list[PlcEntry]:
    """All length-n prefixes of lower Christoffel words, in lexicographic order.

    Depth-first search pruned by the conjunction balanced-and-prefix-normal,
    which is closed under taking prefixes; both checks are maintained
    incrementally on the appended letter.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    ones = [0] * (n + 1)
    zeros = [0] * (n + 1)
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    word: list[str] = []
    out: list[PlcEntry] = []

    def push(c: str) -> list[tuple[int, int, int]] | None:
        m = len(word) + 1
        ones[m] = ones[m - 1] + (c == "1")
        zeros[m] = zeros[m - 1] + (c == "0")
        word.append(c)
        journal: list[tuple[int, int, int]] = []
        for k in range(1, m + 1):
            h = ones[m] - ones[m - k]
            if (k - h) > zeros[k]:  # suffix has more zeros than the prefix
                undo(journal)
                return None
            if k == m:
                journal.append((k, lo[k], hi[k]))
                lo[k] = hi[k] = h
            elif h < hi[k] - 1 or h > lo[k] + 1:
                undo(journal)
                return None
            elif h < lo[k]:
                journal.append((k, lo[k], hi[k]))
                lo[k] = h
            elif h > hi[k]:
                journal.append((k, lo[k], hi[k]))
                hi[k] = h
        return journal

    def undo(journal: list[tuple[int, int, int]]) -> None:
        word.pop()
        for k, l, h in reversed(journal):
            lo[k], hi[k] = l, h

    def walk() -> None:
        if len(word) == n:
            w = "".join(word)
            root = plc_root(w)
            out.append(PlcEntry(w, root, Fraction(root.count("1"), len(root))))
            return
        for c in "01":
            journal = push(c)
            if journal is None:
                continue
            walk()
            undo(journal)

    walk()
    return out


def farey_sequence(n: int) -> list[Fraction]:
    """Reduced fractions a/b with 0 <= a <= b <= n, in increasing order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return sorted({Fraction(a, b) for b in range(1, n + 1) for a in range(b + 1)})


def plc_farey_bijection(n: int) -> list[tuple[PlcEntry, Fraction]]:
    """Pair the i-th length-n prefix word with the i-th Farey fraction.

    The positional pairing must agree with the primitive-root fraction of
    every entry; disagreement is an internal error.
    """
    entries = enumerate_plc(n)
    fractions = farey_sequence(n)
    if len(entries) != len(fractions):
        raise RuntimeError(
            f"size mismatch at n={n}: {len(entries)} words vs {len(fractions)} fractions"
        )
    for entry, frac in zip(entries, fractions):
        if entry.fraction != frac:
            raise RuntimeError(
                f"order mismatch at n={n}: {entry.word} maps to {entry.fraction}, expected {frac}"
            )
    return list(zip(entries, fractions))
