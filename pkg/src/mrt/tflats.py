"""The lattice of T-flats and the beta invariant, four ways.

A T-flat is a non-empty union of circuits.  The poset of T-flats under
inclusion is built by closing the circuit set under unions; its minimal
elements are the circuits and every cover relation raises the level
l(A) = |A| - rank(A) - 1 by exactly one (asserted by the tests, not by
construction).

Beta invariants come in four flavors here, which must agree:

  * `dim_tspace`        Mobius-function dimension formula on the
                        connected-T-flat subposet,
  * `beta_crapo`        Crapo's alternating sum over the lattice of flats,
  * `beta_delcon`       deletion-contraction recursion,
  * the count of beta-nbc sets (computed in `mrt.bcc`).
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .matroid import Matroid

__all__ = [
    "TFlatLattice",
    "build_tflats",
    "mobius",
    "dim_tspace",
    "beta_crapo",
    "beta_delcon",
]


def _key(s: frozenset) -> tuple[int, tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


class TFlatLattice:
    """T-flats of a matroid with covers, levels and connectivity flags."""

    def __init__(self, matroid: Matroid):
        self.matroid = matroid
        circuits = matroid.circuits()
        seen: set[frozenset] = set(circuits)
        queue = list(circuits)
        while queue:
            t = queue.pop()
            for c in circuits:
                u = t | c
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        self.tflats: list[frozenset] = sorted(seen, key=_key)
        self.level: dict[frozenset, int] = {
            t: matroid.level(t) for t in self.tflats
        }
        self._circuits = circuits
        self.connected: set[frozenset] = {
            t for t in self.tflats if self._restriction_connected(t)
        }
        self.upper_covers: dict[frozenset, list[frozenset]] = {}
        self.lower_covers: dict[frozenset, list[frozenset]] = {
            t: [] for t in self.tflats
        }
        for x in self.tflats:
            covers: list[frozenset] = []
            for y in self.tflats:
                if x < y and not any(c < y for c in covers):
                    covers.append(y)
            self.upper_covers[x] = sorted(covers, key=_key)
            for y in covers:
                self.lower_covers[y].append(x)
        for y in self.tflats:
            self.lower_covers[y].sort(key=_key)

    def _restriction_connected(self, t: frozenset) -> bool:
        if len(t) <= 1:
            return True
        need = set(itertools.combinations(sorted(t), 2))
        for c in self._circuits:
            if c <= t:
                for p in itertools.combinations(sorted(c), 2):
                    need.discard(p)
                if not need:
                    return True
        return not need

    def is_tflat(self, subset: Iterable[int]) -> bool:
        return frozenset(subset) in self.level

    def members_below(self, top: frozenset) -> list[frozenset]:
        return [t for t in self.tflats if t <= top]


def build_tflats(matroid: Matroid) -> TFlatLattice:
    return TFlatLattice(matroid)


def _mobius_table(lattice: TFlatLattice, top: frozenset) -> dict[frozenset, int]:
    """Mobius values mu(top, B) on the connected-T-flat subposet below top.

    The poset consists of the connected T-flats contained in `top`, with
    `top` itself adjoined whether or not it is connected.  Values follow
    the reverse-inclusion recursion: mu(top, top) = 1 and the sum of mu
    over any closed interval [B, top] vanishes.
    """
    members = [t for t in lattice.connected if t <= top]
    if top not in members:
        members.append(top)
    members.sort(key=_key, reverse=True)
    table: dict[frozenset, int] = {top: 1}
    for b in members:
        if b == top:
            continue
        table[b] = -sum(table[z] for z in members if b < z and z in table)
    return table


def mobius(lattice: TFlatLattice, top: frozenset, bottom: frozenset) -> int:
    top, bottom = frozenset(top), frozenset(bottom)
    cache = getattr(lattice, "_mobius_cache", None)
    if cache is None:
        cache = lattice._mobius_cache = {}
    table = cache.get(top)
    if table is None:
        table = cache[top] = _mobius_table(lattice, top)
    if bottom not in table:
        raise ValueError(
            f"{sorted(bottom)} is not in the connected subposet below {sorted(top)}"
        )
    return table[bottom]


def dim_tspace(lattice: TFlatLattice, tflat: Iterable[int]) -> int:
    """Multiplicity-space dimension of a T-flat via the Mobius formula.

    dim = (-1)^l(A) * sum over B of mu(A, B) * (l(B) + 1), the sum running
    over the connected T-flats B below A (plus A itself when disconnected).
    """
    top = frozenset(tflat)
    if not lattice.is_tflat(top):
        raise ValueError(f"{sorted(top)} is not a T-flat")
    table = None
    cache = getattr(lattice, "_mobius_cache", None)
    if cache is not None:
        table = cache.get(top)
    if table is None:
        mobius(lattice, top, top)  # populate
        table = lattice._mobius_cache[top]
    lvl = lattice.matroid.level
    total = sum(mu * (lvl(b) + 1) for b, mu in table.items())
    sign = -1 if lvl(top) % 2 else 1
    return sign * total


def beta_crapo(matroid: Matroid) -> int:
    """Crapo's beta: (-1)^r(S) * sum over flats x of mu(0, x) * r(x).

    The lattice of flats is enumerated as closures of independent sets
    (every flat is the closure of any of its maximal independent subsets);
    the bottom element is the closure of the empty set.

    Loops are invisible to the lattice of flats, so on a matroid with a
    loop and other elements besides this formula returns beta of the
    loopless simplification rather than 0.  Such a matroid is
    disconnected, and the agreement guarantees only cover connected
    matroids (which are loop-free once they have two elements), so
    callers that need the degenerate cases should use `beta_delcon`.
    """
    ground = sorted(matroid.ground)
    flats: set[frozenset] = {matroid.closure(frozenset())}
    for k in range(1, matroid.rank(matroid.ground) + 1):
        for combo in itertools.combinations(ground, k):
            s = frozenset(combo)
            if matroid.rank(s) == k:
                flats.add(matroid.closure(s))
    ordered = sorted(flats, key=_key)
    bottom = ordered[0]
    mu: dict[frozenset, int] = {}
    for f in ordered:
        mu[f] = 1 if f == bottom else -sum(
            mu[z] for z in ordered if bottom <= z and z < f
        )
    total = sum(mu[f] * matroid.rank(f) for f in ordered)
    sign = -1 if matroid.rank(matroid.ground) % 2 else 1
    return sign * total


def beta_delcon(matroid: Matroid) -> int:
    """Beta by deletion-contraction on the largest eligible element.

    beta(M) = beta(M delete a) + beta(M contract a) for a neither a loop
    nor a coloop.  Base cases: the empty matroid and any matroid with a
    loop give 0; an all-coloop matroid gives 1 exactly when it is a
    single coloop.  Minors are tracked as (remaining, contracted) pairs
    against the original rank oracle and memoized.
    """
    base = matroid
    memo: dict[tuple[frozenset, frozenset], int] = {}

    def go(ground: frozenset, contracted: frozenset) -> int:
        key = (ground, contracted)
        got = memo.get(key)
        if got is not None:
            return got
        if not ground:
            result = 0
        else:
            rk_contracted = base.rank(contracted)

            def rk(sub: frozenset) -> int:
                return base.rank(sub | contracted) - rk_contracted

            if any(rk(frozenset({x})) == 0 for x in ground):
                result = 0
            else:
                full = rk(ground)
                movable = [
                    x for x in ground if rk(ground - {x}) == full
                ]
                if not movable:
                    result = 1 if len(ground) == 1 else 0
                else:
                    a = max(movable)
                    result = go(ground - {a}, contracted) + go(
                        ground - {a}, contracted | {a}
                    )
        memo[key] = result
        return result

    return go(base.ground, frozenset())
