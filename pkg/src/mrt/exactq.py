"""Exact linear algebra over the rationals and the integers.

Everything here is exact and deterministic: rational arithmetic uses
`fractions.Fraction`, integer arithmetic uses Python's unbounded ints.
No floats anywhere, no modular or probabilistic shortcuts.  The pivot
rule is fixed (first nonzero entry scanning rows top-down, columns
left-to-right), so repeated runs give byte-identical results.

`Rat` is an alias for `fractions.Fraction`; it already maintains the
invariants we care about (positive denominator, lowest terms, canonical
zero), so no wrapper type is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

__all__ = [
    "Rat",
    "QMatrix",
    "ZMatrix",
    "rank",
    "rref",
    "in_span",
    "kernel_basis",
    "smith_normal_form",
]


def _to_rat(x) -> Rat:
    if isinstance(x, Rat):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Rat(x)
    raise TypeError(f"cannot coerce {x!r} to a rational exactly")


@dataclass(frozen=True)
class QMatrix:
    """Immutable rational matrix, stored row-major as nested tuples."""

    rows: tuple[tuple[Rat, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "QMatrix":
        conv = tuple(tuple(_to_rat(x) for x in row) for row in rows)
        if conv:
            width = len(conv[0])
            if any(len(r) != width for r in conv):
                raise ValueError("rows have unequal lengths")
        return cls(conv)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[Rat, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self, js: Sequence[int]) -> "QMatrix":
        return QMatrix(tuple(tuple(row[j] for j in js) for row in self.rows))

    def transpose(self) -> "QMatrix":
        return QMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def mul_vector(self, v: Sequence[Rat]) -> tuple[Rat, ...]:
        if self.ncols != len(v):
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)


@dataclass(frozen=True)
class ZMatrix:
    """Immutable integer matrix, stored row-major as nested tuples."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ZMatrix":
        conv = tuple(tuple(int(x) for x in row) for row in rows)
        if conv:
            width = len(conv[0])
            if any(len(r) != width for r in conv):
                raise ValueError("rows have unequal lengths")
        return cls(conv)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0


def _as_rows(m) -> list[list[Rat]]:
    if isinstance(m, QMatrix):
        return [list(row) for row in m.rows]
    return [[_to_rat(x) for x in row] for row in m]


def rref(m) -> tuple[tuple[tuple[Rat, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (rows, pivot_columns).  Pivots are found by scanning each
    column left to right for the first nonzero entry at or below the
    current row; pivot entries are normalized to 1 and cleared above
    and below.
    """
    rows = _as_rows(m)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(m) -> int:
    """Rank of a rational matrix (exact Gaussian elimination)."""
    _, pivots = rref(m)
    return len(pivots)


def in_span(v: Sequence, basis_cols: Sequence[Sequence]) -> tuple[Rat, ...] | None:
    """Coefficients of `v` in terms of independent column vectors.

    Args:
        v: target vector.
        basis_cols: linearly independent vectors of the same length.

    Returns:
        The unique coefficient tuple c with sum(c[j] * basis_cols[j]) == v,
        or None when v lies outside the span.

    Raises:
        ValueError: on dimension mismatch or dependent basis_cols.
    """
    v = [_to_rat(x) for x in v]
    cols = [[_to_rat(x) for x in col] for col in basis_cols]
    n = len(v)
    if any(len(col) != n for col in cols):
        raise ValueError("dimension mismatch")
    if not cols:
        return () if all(x == 0 for x in v) else None
    aug = QMatrix.from_rows(
        [[cols[j][i] for j in range(len(cols))] + [v[i]] for i in range(n)]
    )
    rows, pivots = rref(aug)
    k = len(cols)
    if any(j not in pivots for j in range(k)):
        raise ValueError("basis_cols are linearly dependent")
    if k in pivots:
        return None
    return tuple(rows[pivots.index(j)][k] for j in range(k))


def kernel_basis(m) -> list[tuple[Rat, ...]]:
    """Basis of the right kernel, one vector per free column.

    Free columns are taken in ascending index order.  Each vector has a 1
    in its free coordinate with pivot coordinates read off the reduced
    echelon form, then the whole vector is scaled so its first nonzero
    entry is positive.  The result is deterministic and exact; the count
    is always ncols - rank.
    """
    mm = m if isinstance(m, QMatrix) else QMatrix.from_rows(m)
    rows, pivots = rref(mm)
    ncols = mm.ncols
    free = [j for j in range(ncols) if j not in pivots]
    basis: list[tuple[Rat, ...]] = []
    for f in free:
        vec = [Rat(0)] * ncols
        vec[f] = Rat(1)
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        lead = next((x for x in vec if x != 0), Rat(1))
        if lead < 0:
            vec = [-x for x in vec]
        basis.append(tuple(vec))
    return basis


def smith_normal_form(m: ZMatrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Returns (d1, ..., dk) with d1 | d2 | ... | dk, all positive, k = rank.
    Classical row/column reduction with arbitrary-precision integers;
    the pivot chosen at each step is the nonzero entry of least absolute
    value (ties broken by row, then column), which keeps intermediate
    growth modest without sacrificing determinism.
    """
    a = [list(row) for row in m.rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        # locate the minimal-magnitude nonzero entry in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // pivot
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // pivot
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j] != 0:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide every remaining entry for d1 | d2 | ...
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        diag.append(abs(a[t][t]))
        t += 1
    return tuple(diag)
