"""Brute-force oracles shared by the test modules.

These are deliberately naive (cofactor determinants, minor scans,
exhaustive subset checks) so they are independent of the library's own
elimination-based code paths.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def det(rows) -> Fraction:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("not square")
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * det(minor)
    return total


def minor_rank(rows) -> int:
    """Rank as the largest k with some nonzero k-by-k minor."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    for k in range(min(nrows, ncols), 0, -1):
        for ris in itertools.combinations(range(nrows), k):
            for cjs in itertools.combinations(range(ncols), k):
                sub = [[rows[i][j] for j in cjs] for i in ris]
                if det(sub) != 0:
                    return k
    return 0


def snf_by_minor_gcds(rows) -> tuple[int, ...]:
    """Invariant factors via determinantal divisors d_k = gcd of k-minors."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    divisors = [1]
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for ris in itertools.combinations(range(nrows), k):
            for cjs in itertools.combinations(range(ncols), k):
                sub = [[rows[i][j] for j in cjs] for i in ris]
                g = gcd(g, int(det(sub)))
        if g == 0:
            break
        divisors.append(g)
    return tuple(divisors[k] // divisors[k - 1] for k in range(1, len(divisors)))


def naive_circuits(ground, rank_fn) -> list[frozenset]:
    """Minimal dependent sets straight from the definition."""
    ground = sorted(ground)
    found: list[frozenset] = []
    for k in range(1, len(ground) + 1):
        for combo in itertools.combinations(ground, k):
            s = frozenset(combo)
            if any(c <= s for c in found):
                continue
            if rank_fn(s) < len(s):
                found.append(s)
    return found


def subset_key(s) -> tuple[int, tuple[int, ...]]:
    t = tuple(sorted(s))
    return (len(t), t)
