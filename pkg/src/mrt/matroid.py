"""Matroids presented by a rank oracle, with minors and duality.

A matroid here is a ground set of integer labels plus a memoized rank
function.  Represented matroids (built from a rational matrix) keep the
column vectors around, keyed by label, so downstream code can go back
to the linear algebra; minors preserve the original labels, never
renumbering.

Conventions:
  * ground labels are positive integers; a matrix column j gets label j+1,
    so a matrix with 5 columns has ground {1, 2, 3, 4, 5};
  * level(A) = |A| - rank(A) - 1, so circuits sit at level 0;
  * the dual rank is r*(X) = |X| - r(S) + r(S \\ X);
  * restriction keeps ground A; contraction onto A contracts S \\ A away
    (ground A, rank X -> r(X u (S \\ A)) - r(S \\ A)).
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping

from .exactq import QMatrix, Rat, kernel_basis, rank as q_rank

__all__ = ["Matroid"]


class Matroid:
    def __init__(
        self,
        ground: Iterable[int],
        rank_fn: Callable[[frozenset], int],
        rep_columns: Mapping[int, tuple[Rat, ...]] | None = None,
    ):
        self._ground = frozenset(int(x) for x in ground)
        self._rank_fn = rank_fn
        self._memo: dict[frozenset, int] = {}
        self._circuits: list[frozenset] | None = None
        self.rep_columns = dict(rep_columns) if rep_columns is not None else None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_matrix(cls, m: QMatrix) -> "Matroid":
        """Column matroid of a rational matrix; column j is labeled j+1."""
        cols = {j + 1: m.column(j) for j in range(m.ncols)}

        def rank_fn(sub: frozenset) -> int:
            labels = sorted(sub)
            return q_rank(QMatrix.from_rows(
                [[cols[l][i] for l in labels] for i in range(m.nrows)]
            )) if labels else 0

        return cls(range(1, m.ncols + 1), rank_fn, rep_columns=cols)

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        """Uniform matroid: every set of size <= r independent."""
        if not (0 <= r <= n):
            raise ValueError("need 0 <= r <= n")
        return cls(range(1, n + 1), lambda sub: min(len(sub), r))

    # -- rank oracle ---------------------------------------------------

    @property
    def ground(self) -> frozenset:
        return self._ground

    def rank(self, subset: Iterable[int] = None) -> int:
        sub = self._ground if subset is None else frozenset(subset)
        if not sub <= self._ground:
            raise ValueError(f"{sorted(sub - self._ground)} outside the ground set")
        got = self._memo.get(sub)
        if got is None:
            got = self._rank_fn(sub)
            self._memo[sub] = got
        return got

    def level(self, subset: Iterable[int] = None) -> int:
        sub = self._ground if subset is None else frozenset(subset)
        return len(sub) - self.rank(sub) - 1

    def is_independent(self, subset: Iterable[int]) -> bool:
        sub = frozenset(subset)
        return self.rank(sub) == len(sub)

    # -- minors and duality -------------------------------------------

    def dual(self) -> "Matroid":
        full = self.rank(self._ground)
        ground = self._ground
        return Matroid(
            ground, lambda sub: len(sub) - full + self.rank(ground - sub)
        )

    def restrict(self, subset: Iterable[int]) -> "Matroid":
        sub = frozenset(subset)
        if not sub <= self._ground:
            raise ValueError("restriction outside the ground set")
        rep = None
        if self.rep_columns is not None:
            rep = {l: v for l, v in self.rep_columns.items() if l in sub}
        return Matroid(sub, self.rank, rep_columns=rep)

    def delete(self, element: int) -> "Matroid":
        return self.restrict(self._ground - {element})

    def contract(self, subset: Iterable[int]) -> "Matroid":
        """Contract everything outside `subset` away; ground becomes `subset`."""
        sub = frozenset(subset)
        if not sub <= self._ground:
            raise ValueError("contraction target outside the ground set")
        away = self._ground - sub
        base = self.rank(away)
        return Matroid(sub, lambda x: self.rank(x | away) - base)

    def contract_elem(self, element: int) -> "Matroid":
        return self.contract(self._ground - {element})

    # -- derived structure ---------------------------------------------

    def circuits(self) -> list[frozenset]:
        """Minimal dependent sets, sorted by size then lexicographically.

        Enumerates subsets by increasing cardinality up to rank+1, skipping
        supersets of circuits already found; a dependent set with no smaller
        circuit inside is itself a circuit.
        """
        if self._circuits is None:
            found: list[frozenset] = []
            elems = sorted(self._ground)
            top = self.rank(self._ground)
            for k in range(1, top + 2):
                for combo in itertools.combinations(elems, k):
                    s = frozenset(combo)
                    if any(c <= s for c in found):
                        continue
                    if self.rank(s) < k:
                        found.append(s)
            found.sort(key=lambda c: (len(c), sorted(c)))
            self._circuits = found
        return list(self._circuits)

    def is_connected(self) -> bool:
        """True when every pair of elements lies in a common circuit.

        Singletons count as connected (a loop's circuit contains it; a
        single coloop is trivially connected).  The empty matroid is
        connected by convention.
        """
        elems = sorted(self._ground)
        if len(elems) <= 1:
            return True
        need = {p for p in itertools.combinations(elems, 2)}
        for c in self.circuits():
            for p in itertools.combinations(sorted(c), 2):
                need.discard(p)
            if not need:
                return True
        return not need

    def closure(self, subset: Iterable[int]) -> frozenset:
        sub = frozenset(subset)
        r = self.rank(sub)
        return sub | {
            x for x in self._ground - sub if self.rank(sub | {x}) == r
        }

    def loops(self) -> frozenset:
        return frozenset(x for x in self._ground if self.rank({x}) == 0)

    def coloops(self) -> frozenset:
        full = self.rank(self._ground)
        return frozenset(
            x for x in self._ground if self.rank(self._ground - {x}) == full - 1
        )

    def lex_greatest_basis(self, subset: Iterable[int] = None) -> frozenset:
        """Greedy basis of `subset`, preferring larger labels.

        Scans labels in descending order and keeps each one that raises
        the rank; the result is the lexicographically greatest basis of
        the restriction when bases are compared as descending tuples.
        """
        sub = self._ground if subset is None else frozenset(subset)
        chosen: set[int] = set()
        r = 0
        for x in sorted(sub, reverse=True):
            if self.rank(chosen | {x}) > r:
                chosen.add(x)
                r += 1
        return frozenset(chosen)

    # -- representation helpers ----------------------------------------

    def column(self, label: int) -> tuple[Rat, ...]:
        if self.rep_columns is None:
            raise ValueError("matroid carries no representation")
        return self.rep_columns[label]

    def columns_matrix(self, labels: Iterable[int]) -> QMatrix:
        labs = sorted(labels)
        cols = [self.column(l) for l in labs]
        height = len(cols[0]) if cols else 0
        return QMatrix.from_rows([[c[i] for c in cols] for i in range(height)])

    def circuit_kernel_vector(self, circuit: Iterable[int]) -> dict[int, Rat]:
        """The (unique up to scale) dependence among a circuit's columns.

        Returns label -> coefficient, normalized so the coefficient of the
        smallest label is positive.  Raises if the kernel is not a line or
        the dependence misses part of the circuit, which would mean the
        set was not a circuit of the represented matroid.
        """
        labs = sorted(circuit)
        ker = kernel_basis(self.columns_matrix(labs))
        if len(ker) != 1 or any(x == 0 for x in ker[0]):
            raise ValueError(f"{labs} is not a circuit of the representation")
        return dict(zip(labs, ker[0]))
