"""Seeded generic representations of uniform matroids.

A rank r uniform matroid on n points is represented by any r x n
rational matrix whose r x r minors are all nonzero.  Entries are drawn
from a seeded generator and the minor condition is checked outright, so
a fixed seed always yields the same matrix and the result is certified
rather than merely probable.
"""

from __future__ import annotations

import itertools
import random

from .exactq import QMatrix, Rat, rank
from .matroid import Matroid

__all__ = ["generic_uniform_matrix", "generic_uniform_matroid"]


def generic_uniform_matrix(r: int, n: int, seed: int = 0, max_attempts: int = 200) -> QMatrix:
    if not 0 < r <= n:
        raise ValueError("need 0 < r <= n")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        m = QMatrix.from_rows(
            [[Rat(rng.randint(-9, 9)) for _ in range(n)] for _ in range(r)]
        )
        if all(
            rank(QMatrix.from_rows([[m.rows[i][j] for j in cols] for i in range(r)])) == r
            for cols in itertools.combinations(range(n), r)
        ):
            return m
    raise RuntimeError(f"no generic matrix found for r={r}, n={n}, seed={seed}")


def generic_uniform_matroid(r: int, n: int, seed: int = 0) -> Matroid:
    return Matroid.from_matrix(generic_uniform_matrix(r, n, seed))
