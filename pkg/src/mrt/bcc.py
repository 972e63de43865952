"""Broken circuit complexes, beta-nbc sets, and integral homology.

The complex side of the toolkit.  For an ordered matroid N the broken
circuits are the sets C minus min(C); BC(N) collects the subsets of the
ground set containing no broken circuit, and the reduced complex drops
the ground minimum (the cone apex).  Homology is reduced, computed over
the integers with Smith normal forms, so torsion is visible and nothing
is floating point.

Beta-nbc sets are produced by the decreasing-chain walk on the lattice
of T-flats of the primal matroid: restrict to the T-flats below A that
contain min(A), qualify a cover when the removed set sits inside the
lexicographically greatest basis of the upper member minus the apex,
label it by the minimum removed element, and keep the maximal chains
with strictly decreasing labels that reach level 0.  Each surviving
label set, together with the apex, is one beta-nbc set; each carries a
basic cycle in the reduced complex of the dual, built from one-element
deletions of the blocks of the minimum-fundamental-circuit map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .exactq import Rat, ZMatrix, in_span, smith_normal_form
from .matroid import Matroid
from .tflats import TFlatLattice, build_tflats

__all__ = [
    "SimplicialComplex",
    "broken_circuits",
    "bc_complex",
    "reduced_bc_complex",
    "faces_by_dim",
    "boundary_matrix",
    "homology",
    "BnbcElement",
    "beta_nbc",
    "beta_nbc_by_activity",
    "chain_edge_annotations",
    "fundamental_circuit",
    "basic_cycle",
    "cycle_boundary",
    "cycle_basis_certificate",
    "epsilon_chain",
    "delta_chain",
    "homology_maps_report",
    "chain_decomposition_check",
]


def _key(s: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    t = tuple(sorted(s))
    return (len(t), t)


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex on integer vertices.

    `faces` holds every face including the empty set; a complex with no
    faces at all (void) is distinct from the complex whose only face is
    the empty set, and the distinction matters for reduced homology.
    """

    vertices: tuple[int, ...]
    faces: frozenset[frozenset]
    facets: tuple[frozenset, ...]

    @classmethod
    def from_face_set(cls, vertices: Iterable[int], faces: set[frozenset]) -> "SimplicialComplex":
        facets = tuple(
            sorted(
                (f for f in faces if not any(f < g for g in faces)),
                key=_key,
            )
        )
        return cls(tuple(sorted(vertices)), frozenset(faces), facets)

    @property
    def dim(self) -> int:
        if not self.faces:
            return -2  # void
        return max(len(f) for f in self.faces) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1


def broken_circuits(matroid: Matroid) -> list[frozenset]:
    """Each circuit minus its smallest element, sorted by size then lex."""
    out = [c - {min(c)} for c in matroid.circuits()]
    out.sort(key=_key)
    return out


def _nbc_face_set(vertices: list[int], broken: list[frozenset]) -> set[frozenset]:
    if any(not b for b in broken):
        return set()  # an empty broken circuit (loop) leaves no faces at all
    faces: set[frozenset] = set()
    for k in range(len(vertices) + 1):
        for combo in itertools.combinations(vertices, k):
            s = frozenset(combo)
            if not any(b <= s for b in broken):
                faces.add(s)
    return faces


def bc_complex(matroid: Matroid) -> tuple[SimplicialComplex, dict]:
    """Broken circuit complex plus a record of its structural properties.

    The report notes whether every face is independent, whether the
    complex and its reduction are pure of dimensions r-1 and r-2, and
    whether the complex is a cone with the ground minimum as apex.  A
    matroid with a loop has an empty broken circuit and therefore a void
    complex; that is flagged, not raised.
    """
    vertices = sorted(matroid.ground)
    broken = broken_circuits(matroid)
    faces = _nbc_face_set(vertices, broken)
    komplex = SimplicialComplex.from_face_set(vertices, faces)
    reduced, _ = reduced_bc_complex(matroid)
    r = matroid.rank(matroid.ground)
    report = {
        "void": not faces,
        "faces_independent": all(matroid.is_independent(f) for f in komplex.facets),
        "reduced_is_subcomplex": reduced.faces <= komplex.faces,
        "pure_dim": komplex.is_pure() and (not faces or komplex.dim == r - 1),
        "reduced_pure_dim": reduced.is_pure() and (not reduced.faces or reduced.dim == r - 2),
        "cone_with_min_apex": bool(faces) and _is_cone(komplex, reduced, min(vertices) if vertices else None),
    }
    return komplex, report


def _is_cone(komplex: SimplicialComplex, base: SimplicialComplex, apex: int | None) -> bool:
    if apex is None:
        return False
    rebuilt = set(base.faces) | {f | {apex} for f in base.faces}
    return rebuilt == set(komplex.faces) and len(komplex.facets) == len(base.facets)


def reduced_bc_complex(matroid: Matroid) -> tuple[SimplicialComplex, dict]:
    """Faces of the broken circuit complex avoiding the ground minimum."""
    vertices = sorted(matroid.ground)
    broken = broken_circuits(matroid)
    rest = vertices[1:]
    faces = _nbc_face_set(rest, broken)
    komplex = SimplicialComplex.from_face_set(rest, faces)
    report = {"void": not faces, "apex": vertices[0] if vertices else None}
    return komplex, report


def faces_by_dim(komplex: SimplicialComplex) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = {}
    for f in komplex.faces:
        out.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in out:
        out[k].sort()
    return out


def boundary_matrix(
    komplex: SimplicialComplex, k: int, table: dict[int, list[tuple[int, ...]]] | None = None
) -> ZMatrix:
    """Integer matrix of the reduced boundary C_k -> C_{k-1}."""
    table = table if table is not None else faces_by_dim(komplex)
    upper = table.get(k, [])
    lower = table.get(k - 1, [])
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for i in range(len(f)):
            g = f[:i] + f[i + 1:]
            rows[index[g]][j] += -1 if i % 2 else 1
    return ZMatrix.from_rows(rows) if lower else ZMatrix.from_rows([])


class HomologyGroup(NamedTuple):
    betti: int
    torsion: tuple[int, ...]


def homology(komplex: SimplicialComplex) -> dict[int, HomologyGroup]:
    """Reduced integral homology in every dimension from -1 up.

    Ranks come from Smith normal forms of the boundary matrices; the
    torsion in degree k is the list of invariant factors of the degree
    k+1 boundary that exceed 1.  The complex whose only face is the
    empty set has homology of rank 1 in degree -1; the void complex has
    none anywhere.
    """
    table = faces_by_dim(komplex)
    if not table:
        return {}
    top = max(table)
    snf: dict[int, tuple[int, ...]] = {}
    for k in range(-1, top + 2):
        if table.get(k) and table.get(k - 1):
            snf[k] = smith_normal_form(boundary_matrix(komplex, k, table))
        else:
            snf[k] = ()
    out: dict[int, HomologyGroup] = {}
    for k in range(-1, top + 1):
        n_k = len(table.get(k, []))
        betti = n_k - len(snf[k]) - len(snf[k + 1])
        torsion = tuple(d for d in snf[k + 1] if d > 1)
        out[k] = HomologyGroup(betti, torsion)
    return out


# ---------------------------------------------------------------------------
# beta-nbc via decreasing chains


@dataclass(frozen=True)
class BnbcElement:
    """One beta-nbc set: the labels of a decreasing chain plus the apex.

    `chain` is the canonical witness (T-flats descending from the T-flat
    the walk started at down to a circuit); `all_chains` lists every
    decreasing chain with this label set, canonical first.
    """

    bset: frozenset
    labels: tuple[int, ...]
    chain: tuple[frozenset, ...]
    all_chains: tuple[tuple[frozenset, ...], ...] = ()


def _qualified_lower_covers(
    matroid: Matroid, lattice: TFlatLattice, members: set[frozenset], apex: int
) -> dict[frozenset, list[tuple[int, frozenset]]]:
    qual: dict[frozenset, list[tuple[int, frozenset]]] = {}
    for upper in members:
        basis = matroid.lex_greatest_basis(upper - {apex})
        found: list[tuple[int, frozenset]] = []
        for lower in lattice.lower_covers[upper]:
            if lower in members:
                diff = upper - lower
                if diff <= basis:
                    found.append((min(diff), lower))
        found.sort(key=lambda t: (-t[0], tuple(sorted(t[1]))))
        qual[upper] = found
    return qual


def beta_nbc(matroid: Matroid, lattice: TFlatLattice, tflat: Iterable[int]) -> list[BnbcElement]:
    """Beta-nbc sets of the dual of the restriction to a T-flat.

    Walks the restricted T-flat poset from `tflat` downward along
    qualified covers, keeping only strictly decreasing label sequences
    that reach a circuit.  Elements come back sorted by their set; each
    set's canonical chain is the first found with qualified edges
    visited in descending label order.
    """
    top = frozenset(tflat)
    if not lattice.is_tflat(top):
        raise ValueError(f"{sorted(top)} is not a T-flat")
    apex = min(top)
    members = {t for t in lattice.tflats if t <= top and apex in t}
    qual = _qualified_lower_covers(matroid, lattice, members, apex)
    lvl = lattice.level
    found: list[tuple[tuple[int, ...], tuple[frozenset, ...]]] = []

    def walk(node: frozenset, bound: float, labels: tuple, path: tuple):
        if lvl[node] == 0:
            found.append((labels, path))
            return
        for label, child in qual[node]:
            if label < bound:
                walk(child, label, labels + (label,), path + (child,))

    walk(top, float("inf"), (), (top,))
    grouped: dict[frozenset, list[tuple[tuple[int, ...], tuple[frozenset, ...]]]] = {}
    for labels, path in found:
        grouped.setdefault(frozenset(labels) | {apex}, []).append((labels, path))
    out = []
    for bset, entries in grouped.items():
        labels, path = entries[0]
        assert len(bset) == lvl[top] + 1
        out.append(
            BnbcElement(
                bset=bset,
                labels=labels,
                chain=path,
                all_chains=tuple(p for _, p in entries),
            )
        )
    out.sort(key=lambda e: tuple(sorted(e.bset)))
    return out


def chain_edge_annotations(
    matroid: Matroid, lattice: TFlatLattice, tflat: Iterable[int]
) -> dict[tuple[frozenset, frozenset], tuple[int, bool]]:
    """Edges explored by the chain walk, for drawing.

    Returns (upper, lower) -> (label, descending) for every qualified
    cover inspected from a node reached along a decreasing prefix.  An
    edge whose label fails the descent is reported with descending=False
    (drawn dashed); qualified edges never reached stay unannotated.
    """
    top = frozenset(tflat)
    apex = min(top)
    members = {t for t in lattice.tflats if t <= top and apex in t}
    qual = _qualified_lower_covers(matroid, lattice, members, apex)
    lvl = lattice.level
    annotations: dict[tuple[frozenset, frozenset], tuple[int, bool]] = {}
    seen: set[tuple[frozenset, float]] = set()

    def walk(node: frozenset, bound: float):
        if lvl[node] == 0 or (node, bound) in seen:
            return
        seen.add((node, bound))
        for label, child in qual[node]:
            edge = (node, child)
            if label < bound:
                annotations[edge] = (label, True)
                walk(child, label)
            elif edge not in annotations:
                annotations[edge] = (label, False)

    walk(top, float("inf"))
    return annotations


def fundamental_circuit(matroid: Matroid, independent: Iterable[int], extra: int) -> frozenset:
    """The unique circuit inside an independent set plus one element."""
    base = frozenset(independent)
    cand = base | {extra}
    r = matroid.rank(cand)
    if r != len(base) or matroid.rank(base) != len(base):
        raise ValueError("need an independent set spanning the extra element")
    circuit = frozenset(x for x in cand if matroid.rank(cand - {x}) == r)
    assert matroid.rank(circuit) == len(circuit) - 1
    return circuit


def beta_nbc_by_activity(bc_matroid: Matroid) -> list[frozenset]:
    """Cross-check characterization on the complex-side matroid.

    A set qualifies when it is a basis containing no broken circuit and,
    for every member except the ground minimum, the member is not the
    minimum of its fundamental circuit in the dual with respect to the
    complementary basis.
    """
    n = bc_matroid
    ground = sorted(n.ground)
    if not ground:
        return []
    first = ground[0]
    broken = broken_circuits(n)
    primal = n.dual()
    r = n.rank(n.ground)
    out = []
    for combo in itertools.combinations(ground, r):
        b = frozenset(combo)
        if n.rank(b) != r:
            continue
        if any(bc <= b for bc in broken):
            continue
        rest = n.ground - b
        if first not in b:
            continue
        ok = True
        for elem in sorted(b - {first}):
            if elem == min(fundamental_circuit(primal, rest, elem)):
                ok = False
                break
        if ok:
            out.append(b)
    out.sort(key=lambda s: tuple(sorted(s)))
    return out


# ---------------------------------------------------------------------------
# basic cycles


def _sort_sign(seq: list[int]) -> int:
    inversions = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


def basic_cycle(element: BnbcElement, bc_matroid: Matroid) -> dict[tuple[int, ...], int]:
    """Top-dimensional cycle attached to a beta-nbc set.

    Blocks come from the map sending each member b to the minimum of the
    fundamental circuit of b against the complementary basis in the dual
    of `bc_matroid`; each block is a value together with its preimage,
    ascending.  The cycle is the join of the block boundary cycles: sum
    over all ways of deleting a single element from every block, signed
    by the deletion indices and the shuffle sorting the face ascending,
    then normalized so the all-minima face (every block minus its least
    element) has coefficient exactly +1.  That normalization is what
    makes the projection dropping the ground maximum send this cycle
    precisely to the one of the smaller set, with no stray sign.
    """
    primal = bc_matroid.dual()
    ground = bc_matroid.ground
    b = element.bset
    rest = ground - b
    phi = {x: min(fundamental_circuit(primal, rest, x)) for x in sorted(b)}
    blocks: list[list[int]] = []
    for value in sorted(set(phi.values())):
        blocks.append(sorted({value} | {x for x in b if phi[x] == value}))
    flat = [x for blk in blocks for x in blk]
    assert len(flat) == len(set(flat)), "blocks must be disjoint"
    unit = _sort_sign([x for blk in blocks for x in blk[1:]])
    cycle: dict[tuple[int, ...], int] = {}
    for choice in itertools.product(*[range(len(blk)) for blk in blocks]):
        seq: list[int] = []
        for blk, i in zip(blocks, choice):
            seq.extend(x for k, x in enumerate(blk) if k != i)
        face = tuple(sorted(seq))
        assert face not in cycle
        sign = (-1) ** sum(choice) * _sort_sign(seq) * unit
        cycle[face] = sign
    return cycle


def cycle_boundary(cycle: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for face, coeff in cycle.items():
        for i in range(len(face)):
            g = face[:i] + face[i + 1:]
            sign = -1 if i % 2 else 1
            out[g] = out.get(g, 0) + sign * coeff
    return {f: c for f, c in out.items() if c != 0}


def _cycle_vectors(
    cycles: list[dict[tuple[int, ...], int]], faces: list[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    index = {f: i for i, f in enumerate(faces)}
    vecs = []
    for cyc in cycles:
        v = [0] * len(faces)
        for f, c in cyc.items():
            v[index[f]] = c
        vecs.append(tuple(v))
    return vecs


def cycle_basis_certificate(
    matroid: Matroid, lattice: TFlatLattice, tflat: Iterable[int]
) -> dict:
    """Certify that the basic cycles form a lattice basis of top homology.

    Checks, for the reduced complex of the dual of the restriction:
    every basic cycle has zero boundary and lives on faces of the
    complex, its all-minima face has coefficient +-1, the coefficient
    matrix has all-ones Smith form (the columns span a direct summand),
    and the number of cycles equals the top betti number.  Together
    these force the cycles to be an integral basis of the top homology
    lattice.
    """
    top = frozenset(tflat)
    sub = matroid.restrict(top)
    n = sub.dual()
    komplex, _ = reduced_bc_complex(n)
    table = faces_by_dim(komplex)
    elements = beta_nbc(matroid, lattice, top)
    lvl = lattice.level[top]
    hom = homology(komplex)
    betti_top = hom.get(lvl - 1, HomologyGroup(0, ())).betti
    cycles = [basic_cycle(e, n) for e in elements]
    boundaries_vanish = all(not cycle_boundary(c) for c in cycles)
    faces_ok = all(
        frozenset(f) in komplex.faces for c in cycles for f in c
    )
    minima_ok = True
    for e, c in zip(elements, cycles):
        primal = n.dual()
        rest = n.ground - e.bset
        phi = {x: min(fundamental_circuit(primal, rest, x)) for x in sorted(e.bset)}
        blocks = [
            sorted({v} | {x for x in e.bset if phi[x] == v})
            for v in sorted(set(phi.values()))
        ]
        face = tuple(sorted(x for blk in blocks for x in blk[1:]))
        if c.get(face, 0) != 1:
            minima_ok = False
    faces_top = table.get(lvl - 1, [])
    vectors = _cycle_vectors(cycles, faces_top) if faces_ok else []
    if vectors and faces_top:
        diag = smith_normal_form(
            ZMatrix.from_rows([list(row) for row in zip(*vectors)])
        )
    else:
        diag = ()
    unimodular = (
        bool(cycles)
        and len(diag) == len(cycles)
        and all(d == 1 for d in diag)
    ) or (not cycles and betti_top == 0)
    return {
        "ok": boundaries_vanish and faces_ok and minima_ok and unimodular
        and len(cycles) == betti_top,
        "count": len(cycles),
        "betti_top": betti_top,
        "boundaries_vanish": boundaries_vanish,
        "faces_in_complex": faces_ok,
        "minima_coefficient_unit": minima_ok,
        "smith_diagonal": diag,
        "elements": elements,
        "cycles": cycles,
        "complex": komplex,
    }


# ---------------------------------------------------------------------------
# chain maps between complexes of minors


class ChainMap(NamedTuple):
    """Face-level map between complexes, applied to integer chains."""

    source: SimplicialComplex
    target: SimplicialComplex
    apply: object  # callable dict-chain -> dict-chain

    def on_chain(self, chain: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
        return self.apply(chain)


def epsilon_chain(bc_sub: Matroid, bc_full: Matroid) -> ChainMap:
    """Inclusion of the reduced complex of a submatroid, face by face.

    Raises when some face of the source complex is missing from the
    target, which would mean the inclusion hypothesis fails.
    """
    src, _ = reduced_bc_complex(bc_sub)
    dst, _ = reduced_bc_complex(bc_full)
    missing = [f for f in src.faces if f not in dst.faces]
    if missing:
        raise ValueError(
            f"source complex is not a subcomplex; first missing face {sorted(missing[0])}"
        )

    def apply(chain: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
        return dict(chain)

    return ChainMap(src, dst, apply)


def delta_chain(bc_full: Matroid, element: int) -> ChainMap:
    """Projection onto faces containing `element`, dropping it.

    `element` is expected to be the ground maximum, so in ascending face
    order it sits last and the quotient identification carries no sign:
    a face F with the element maps to F minus it, all other faces to 0.
    """
    src, _ = reduced_bc_complex(bc_full)
    dst, _ = reduced_bc_complex(bc_full.contract_elem(element))

    def apply(chain: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for face, coeff in chain.items():
            if element in face:
                g = tuple(x for x in face if x != element)
                if frozenset(g) not in dst.faces:
                    raise ValueError(f"image face {g} missing from the target complex")
                out[g] = out.get(g, 0) + coeff
        return {f: c for f, c in out.items() if c != 0}

    return ChainMap(src, dst, apply)


def _expand_in_cycles(
    chain: dict[tuple[int, ...], int],
    cycles: list[dict[tuple[int, ...], int]],
    faces: list[tuple[int, ...]],
) -> tuple[Rat, ...] | None:
    if not cycles:
        return () if not chain else None
    vecs = _cycle_vectors(cycles, faces)
    target = [Rat(0)] * len(faces)
    index = {f: i for i, f in enumerate(faces)}
    for f, c in chain.items():
        target[index[f]] = Rat(c)
    cols = [[Rat(x) for x in v] for v in vecs]
    return in_span(target, cols)


def homology_maps_report(matroid: Matroid, element: int) -> dict:
    """Chain-level epsilon and delta against their closed-form patterns.

    Works on the duals: with N the dual of `matroid`, epsilon includes
    the reduced complex of N minus `element` (the dual of the
    contraction) into that of N, and delta projects onto the complex of
    N contracted by `element` (the dual of the deletion).  Matrices are
    taken in the basic-cycle bases; the report also records exactness of
    the induced three-term sequence in top degree.
    """
    a = element
    m_del = matroid.delete(a)
    m_con = matroid.contract_elem(a)
    lat = build_tflats(matroid)
    lat_del = build_tflats(m_del)
    lat_con = build_tflats(m_con)
    s = matroid.ground
    sa = s - {a}
    lvl = matroid.level(s)

    elems = beta_nbc(matroid, lat, s)
    elems_del = beta_nbc(m_del, lat_del, sa)
    elems_con = beta_nbc(m_con, lat_con, sa)

    n = matroid.dual()
    n_sub = n.delete(a)      # dual of the contraction
    eps = epsilon_chain(n_sub, n)
    dlt = delta_chain(n, a)

    table = faces_by_dim(eps.target)
    faces_top = table.get(lvl - 1, [])
    cycles = [basic_cycle(e, n) for e in elems]
    cycles_sub = [basic_cycle(e, n_sub) for e in elems_con]
    n_quot = n.contract_elem(a)  # dual of the deletion
    cycles_quot = [basic_cycle(e, n_quot) for e in elems_del]
    table_quot = faces_by_dim(dlt.target)
    faces_quot_top = table_quot.get(lvl - 2, [])

    index_full = {e.bset: i for i, e in enumerate(elems)}
    index_del = {e.bset: i for i, e in enumerate(elems_del)}

    eps_cols: list[tuple[Rat, ...]] = []
    eps_chain_level = True
    for e, cyc in zip(elems_con, cycles_sub):
        image = eps.on_chain(cyc)
        coeffs = _expand_in_cycles(image, cycles, faces_top)
        if coeffs is None:
            raise ValueError("epsilon image escaped the basic-cycle span")
        eps_cols.append(coeffs)
        i = index_full.get(e.bset)
        if i is None or image != cycles[i]:
            eps_chain_level = False
    delta_cols: list[tuple[Rat, ...]] = []
    delta_chain_level = True
    for e, cyc in zip(elems, cycles):
        image = dlt.on_chain(cyc)
        coeffs = _expand_in_cycles(image, cycles_quot, faces_quot_top)
        if coeffs is None:
            raise ValueError("delta image escaped the basic-cycle span")
        delta_cols.append(coeffs)
        if a in e.bset:
            i = index_del.get(e.bset - {a})
            if i is None or image != cycles_quot[i]:
                delta_chain_level = False
        elif image:
            delta_chain_level = False

    eps_pattern_ok = True
    for j, e in enumerate(elems_con):
        want = [Rat(0)] * len(elems)
        if e.bset in index_full:
            want[index_full[e.bset]] = Rat(1)
        if list(eps_cols[j]) != want:
            eps_pattern_ok = False
    delta_pattern_ok = True
    for j, e in enumerate(elems):
        want = [Rat(0)] * len(elems_del)
        if a in e.bset and e.bset - {a} in index_del:
            want[index_del[e.bset - {a}]] = Rat(1)
        if list(delta_cols[j]) != want:
            delta_pattern_ok = False

    rank_eps = len(elems_con)
    rank_delta = len(elems_del)
    compose_zero = all(
        all(
            sum(delta_cols[i][r] * eps_cols[j][i] for i in range(len(elems))) == 0
            for r in range(len(elems_del))
        )
        for j in range(len(elems_con))
    )
    exact = (
        eps_pattern_ok
        and delta_pattern_ok
        and compose_zero
        and rank_eps + rank_delta == len(elems)
    )
    return {
        "ok": eps_pattern_ok and delta_pattern_ok and exact
        and eps_chain_level and delta_chain_level,
        "epsilon_matrix": eps_cols,
        "delta_matrix": delta_cols,
        "epsilon_pattern_ok": eps_pattern_ok,
        "delta_pattern_ok": delta_pattern_ok,
        "epsilon_chain_level": eps_chain_level,
        "delta_chain_level": delta_chain_level,
        "compose_zero": compose_zero,
        "exact": exact,
        "epsilon_tilde_sign": -1 if lvl % 2 else 1,
        "counts": (len(elems_con), len(elems), len(elems_del)),
    }


# ---------------------------------------------------------------------------
# chain decomposition under deletion/contraction


def chain_decomposition_check(matroid: Matroid, element: int) -> dict:
    """Partition of decreasing chains under deleting/contracting max(S).

    With a = `element` = max(S), M connected and a neither loop nor
    coloop: when S minus a is not a T-flat the contraction has the same
    T-flats (a dropped from names) and the same chains; when it is a
    T-flat, the chains through it correspond to the deletion's chains
    (first label a removed) and the chains avoiding it to the
    contraction's chains (names intersected with S minus a, labels
    kept).  Counts give beta(M) = beta(M delete a) + beta(M contract a).
    """
    a = element
    s = matroid.ground
    sa = s - {a}
    lat = build_tflats(matroid)
    elems = beta_nbc(matroid, lat, s)
    m_con = matroid.contract_elem(a)
    lat_con = build_tflats(m_con)
    report: dict = {"tflat_without": lat.is_tflat(sa)}

    def chains_of(elements: list[BnbcElement]) -> set:
        return {(e.labels, path) for e in elements for path in e.all_chains}

    top_chains = chains_of(elems)
    if not lat.is_tflat(sa):
        same_tflats = sorted((t - {a} for t in lat.tflats), key=_key) == sorted(
            lat_con.tflats, key=_key
        )
        elems_con = beta_nbc(m_con, lat_con, sa) if lat_con.is_tflat(sa) else []
        renamed = {
            (labels, tuple(t - {a} for t in path)) for labels, path in top_chains
        }
        report.update(
            {
                "same_tflats": same_tflats,
                "same_chains": renamed == chains_of(elems_con),
                "same_bsets": {e.bset for e in elems}
                == {e.bset for e in elems_con},
                "ok": same_tflats
                and renamed == chains_of(elems_con)
                and {e.bset for e in elems} == {e.bset for e in elems_con},
            }
        )
        return report

    m_del = matroid.delete(a)
    lat_del = build_tflats(m_del)
    elems_del = beta_nbc(m_del, lat_del, sa)
    elems_con = beta_nbc(m_con, lat_con, sa)
    through = {
        (labels, path) for labels, path in top_chains if len(path) > 1 and path[1] == sa
    }
    avoiding = top_chains - through
    del_match = {
        (labels[1:], path[1:]) for labels, path in through
    } == chains_of(elems_del)
    con_match = {
        (labels, tuple(t - {a} for t in path)) for labels, path in avoiding
    } == chains_of(elems_con)
    bsets_split = (
        {e.bset - {a} for e in elems if a in e.bset} == {e.bset for e in elems_del}
        and {e.bset for e in elems if a not in e.bset} == {e.bset for e in elems_con}
    )
    counts_add = len(elems) == len(elems_del) + len(elems_con)
    report.update(
        {
            "deletion_chains_match": del_match,
            "contraction_chains_match": con_match,
            "bsets_partition": bsets_split,
            "counts_additive": counts_add,
            "counts": (len(elems), len(elems_del), len(elems_con)),
            "ok": del_match and con_match and bsets_split and counts_add,
        }
    )
    return report
