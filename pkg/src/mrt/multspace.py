"""Multiplicity spaces: symmetric-power polynomials attached to T-flats.

Every beta-nbc set B of (the dual of the restriction to) a T-flat A
carries a homogeneous polynomial x_B of degree l(A) in Sym of the span
of A's columns.  The factors come from the canonical decreasing chain
of B read bottom-up: each cover step J_prev within J_cur contributes
the unique vector u = e_p + sum of c_j e_j (p the largest new label,
j over the other new labels) whose column combination lands in the span
of J_prev's columns; that combination, written in a frame of the span,
is one linear factor.

Polynomials are plain dictionaries mapping exponent tuples to rationals
in a fixed frame, so equality, vectorization, and rank questions stay
exact.  The nu map multiplies by the form of a deleted column, the pi
map substitutes the quotient relation into the largest pivot
coordinate, and together they realize the deletion/contraction exact
sequence on multiplicity spaces; the diagram report compares their
matrices with the transposed homology matrices of the chain maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bcc import BnbcElement, beta_nbc, homology_maps_report
from .exactq import QMatrix, Rat, in_span, rank
from .genuniform import generic_uniform_matroid
from .matroid import Matroid
from .tflats import TFlatLattice, build_tflats, dim_tspace

__all__ = [
    "Frame",
    "Poly",
    "poly_from_linear",
    "poly_mul",
    "poly_add",
    "poly_scale",
    "poly_one",
    "poly_to_string",
    "monomial_exponents",
    "poly_vector",
    "chain_linear_form",
    "polynomial_from_chain",
    "multiplicity_polynomial",
    "multiplicity_basis",
    "substitute_out",
    "nu_pi_report",
    "diagram_check",
    "uniform_symmetric_basis_check",
]

Poly = dict[tuple[int, ...], Rat]


# ---------------------------------------------------------------------------
# frames and polynomial arithmetic


@dataclass(frozen=True)
class Frame:
    """Ordered basis of a column span, used as polynomial coordinates."""

    labels: tuple[int, ...]
    columns: tuple[tuple[Rat, ...], ...]

    @classmethod
    def standard(cls, k: int) -> "Frame":
        cols = tuple(
            tuple(Rat(1) if i == j else Rat(0) for i in range(k)) for j in range(k)
        )
        return cls(labels=(), columns=cols)

    @classmethod
    def from_basis_labels(cls, matroid: Matroid, labels: Iterable[int]) -> "Frame":
        ordered = tuple(sorted(labels))
        return cls(ordered, tuple(matroid.column(x) for x in ordered))

    @property
    def dim(self) -> int:
        return len(self.columns)

    def coords(self, vector: Iterable[Rat]) -> tuple[Rat, ...]:
        got = in_span(list(vector), [list(c) for c in self.columns])
        if got is None:
            raise ValueError("vector lies outside the frame's span")
        return got


def poly_from_linear(form: Iterable[Rat]) -> Poly:
    coeffs = list(form)
    k = len(coeffs)
    out: Poly = {}
    for i, c in enumerate(coeffs):
        if c != 0:
            exp = tuple(1 if j == i else 0 for j in range(k))
            out[exp] = Rat(c)
    return out


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for exp, c in q.items():
        s = out.get(exp, Rat(0)) + c
        if s:
            out[exp] = s
        else:
            out.pop(exp, None)
    return out


def poly_scale(p: Poly, c: Rat) -> Poly:
    return {} if c == 0 else {exp: v * c for exp, v in p.items()}


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exp = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(exp, Rat(0)) + c1 * c2
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
    return out


def poly_one(k: int) -> Poly:
    return {(0,) * k: Rat(1)}


def poly_to_string(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for exp in sorted(p, reverse=True):
        c = p[exp]
        factors = [
            f"{var}{i + 1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exp)
            if e > 0
        ]
        body = "*".join(factors)
        if not body:
            parts.append((c, str(c)))
            continue
        if c == 1:
            parts.append((c, body))
        elif c == -1:
            parts.append((c, f"-{body}"))
        else:
            parts.append((c, f"{c}*{body}"))
    text = parts[0][1]
    for c, chunk in parts[1:]:
        text += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
    return text


def monomial_exponents(k: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of the given total degree, lexicographically."""
    if k == 0:
        return [()] if degree == 0 else []
    out = []
    for head in range(degree, -1, -1):
        for tail in monomial_exponents(k - 1, degree - head):
            out.append((head,) + tail)
    out.sort()
    return out


def poly_vector(p: Poly, k: int, degree: int) -> tuple[Rat, ...]:
    basis = monomial_exponents(k, degree)
    index = {e: i for i, e in enumerate(basis)}
    v = [Rat(0)] * len(basis)
    for exp, c in p.items():
        v[index[exp]] = c
    return tuple(v)


# ---------------------------------------------------------------------------
# chain factors and multiplicity polynomials


def chain_linear_form(
    matroid: Matroid, upper: Iterable[int], lower: Iterable[int]
) -> tuple[Rat, ...]:
    """Ambient vector of the linear factor contributed by one cover step.

    For new labels D = upper minus lower, solves for the combination
    col(p) + sum over j in D minus p of c_j col(j) lying in the span of
    the lower member's columns, p = min(D).  The solution of a cover
    step has full support on D (anything smaller would wedge a T-flat
    strictly between the two), so the normalization position is free;
    anchoring the unit coefficient at the smallest new label is the
    choice stable under contracting away the largest ground element,
    which the substitution map's literal identity requires.  Raises if
    the solution is not unique or does not exist.
    """
    up = frozenset(upper)
    low = frozenset(lower)
    if not low < up:
        raise ValueError("need a strictly nested pair")
    diff = sorted(up - low)
    p = diff[0]
    others = diff[1:]
    span_labels = sorted(matroid.lex_greatest_basis(low))
    cols = [list(matroid.column(x)) for x in others]
    cols += [[-c for c in matroid.column(x)] for x in span_labels]
    target = [-c for c in matroid.column(p)]
    if not cols:
        if any(c != 0 for c in target):
            raise ValueError("no solution: new column outside the lower span")
        coeffs: tuple[Rat, ...] = ()
    else:
        got = in_span(target, cols)
        if got is None:
            raise ValueError("no solution for the chain factor")
        coeffs = got
    vec = list(matroid.column(p))
    for x, c in zip(others, coeffs[: len(others)]):
        col = matroid.column(x)
        vec = [v + c * w for v, w in zip(vec, col)]
    return tuple(vec)


def polynomial_from_chain(
    matroid: Matroid, path: tuple[frozenset, ...], frame: Frame
) -> Poly:
    """Product of the chain factors of one descending chain, bottom-up."""
    poly = poly_one(frame.dim)
    for i in range(len(path) - 1, 0, -1):
        vec = chain_linear_form(matroid, path[i - 1], path[i])
        poly = poly_mul(poly, poly_from_linear(frame.coords(vec)))
    return poly


def multiplicity_polynomial(
    matroid: Matroid, element: BnbcElement, frame: Frame
) -> Poly:
    """The polynomial x_B computed from the element's canonical chain."""
    return polynomial_from_chain(matroid, element.chain, frame)


def multiplicity_basis(
    matroid: Matroid,
    lattice: TFlatLattice,
    tflat: Iterable[int],
    frame: Frame | None = None,
) -> dict:
    """Polynomials x_B for a T-flat, with an exact rank certificate.

    The report is ok when the number of polynomials, their rank as
    vectors in the monomial basis, and the T-flat's multiplicity
    dimension all agree.  When a set admits several decreasing chains
    the polynomial comes from the canonical one; sets whose other
    chains would give a different polynomial are listed under
    chain_discrepancies (reported, not treated as failure).
    """
    top = frozenset(tflat)
    if frame is None:
        frame = Frame.from_basis_labels(matroid, matroid.lex_greatest_basis(top))
    elements = beta_nbc(matroid, lattice, top)
    degree = lattice.level[top]
    polys = [multiplicity_polynomial(matroid, e, frame) for e in elements]
    discrepancies = []
    for e, p in zip(elements, polys):
        for other in e.all_chains[1:]:
            if polynomial_from_chain(matroid, other, frame) != p:
                discrepancies.append(e.bset)
                break
    vectors = [poly_vector(p, frame.dim, degree) for p in polys]
    rk = (
        rank(QMatrix.from_rows([list(v) for v in vectors])) if vectors else 0
    )
    want = dim_tspace(lattice, top)
    return {
        "ok": len(polys) == rk == want,
        "count": len(polys),
        "rank": rk,
        "dim": want,
        "elements": elements,
        "polys": polys,
        "frame": frame,
        "degree": degree,
        "chain_discrepancies": discrepancies,
    }


# ---------------------------------------------------------------------------
# nu, pi, and the commuting-diagram report


def substitute_out(p: Poly, pivot: int, subst: tuple[Rat, ...]) -> Poly:
    """Eliminate one variable: t_pivot becomes a form in the others.

    `subst` is the replacement linear form over the reduced variable
    list (pivot removed); the result lives in one fewer variable.
    """
    out: Poly = {}
    subst_poly = poly_from_linear(subst)
    for exp, c in p.items():
        reduced = exp[:pivot] + exp[pivot + 1:]
        term: Poly = {reduced: c}
        for _ in range(exp[pivot]):
            term = poly_mul(term, subst_poly)
        out = poly_add(out, term)
    return out


def _represented(labels: Iterable[int], columns: dict[int, tuple[Rat, ...]]) -> Matroid:
    ground = frozenset(labels)

    def rank_fn(subset: frozenset) -> int:
        if not subset:
            return 0
        sel = sorted(subset)
        nrows = len(next(iter(columns.values())))
        m = QMatrix.from_rows(
            [[columns[x][i] for x in sel] for i in range(nrows)]
        )
        return rank(m)

    return Matroid(ground, rank_fn, rep_columns=dict(columns))


def quotient_representation(
    matroid: Matroid, frame: Frame, element: int
) -> tuple[Matroid, int, tuple[Rat, ...]]:
    """Representation of the contraction in substituted coordinates.

    Writes the contracted column in the frame, picks its largest nonzero
    coordinate as the pivot, and maps every other column to the reduced
    coordinate tuple obtained by substituting the pivot away.  Returns
    the represented contraction, the pivot index, and the substitution
    form over the reduced variables.
    """
    va = frame.coords(matroid.column(element))
    pivot = max(i for i, c in enumerate(va) if c != 0)
    reduced_idx = [i for i in range(len(va)) if i != pivot]
    subst = tuple(-va[i] / va[pivot] for i in reduced_idx)

    def reduce(vec: tuple[Rat, ...]) -> tuple[Rat, ...]:
        coords = frame.coords(vec)
        return tuple(
            coords[i] + coords[pivot] * s for i, s in zip(reduced_idx, subst)
        )

    columns = {
        x: reduce(matroid.column(x)) for x in sorted(matroid.ground - {element})
    }
    if not reduced_idx:
        columns = {x: () for x in columns}
    qm = _represented(matroid.ground - {element}, columns)
    return qm, pivot, subst


def nu_pi_report(matroid: Matroid, element: int) -> dict:
    """Multiplication and substitution maps in the x_B bases.

    nu multiplies degree l-1 deletion polynomials by the form of the
    removed column; pi substitutes the quotient relation into the full
    polynomials.  The report records the literal identities (nu of the
    deletion polynomial equals the polynomial of the set plus the
    element; pi kills sets containing it and reproduces the contraction
    polynomials otherwise), the matrices in the bases, and exactness.
    """
    a = element
    s = matroid.ground
    sa = s - {a}
    lat = build_tflats(matroid)
    frame = Frame.from_basis_labels(matroid, matroid.lex_greatest_basis(s))
    full = multiplicity_basis(matroid, lat, s, frame=frame)
    if not full["ok"]:
        raise ValueError("full multiplicity basis failed its certificate")

    m_del = matroid.delete(a)
    lat_del = build_tflats(m_del)
    del_basis = multiplicity_basis(m_del, lat_del, sa, frame=frame)

    qm, pivot, subst = quotient_representation(matroid, frame, a)
    lat_con = build_tflats(qm)
    qframe = Frame.standard(frame.dim - 1)
    con_basis = multiplicity_basis(qm, lat_con, sa, frame=qframe)

    k = frame.dim
    degree = full["degree"]
    va_form = frame.coords(matroid.column(a))
    index_full = {e.bset: i for i, e in enumerate(full["elements"])}
    index_con = {e.bset: i for i, e in enumerate(con_basis["elements"])}

    full_vectors = [poly_vector(p, k, degree) for p in full["polys"]]
    full_cols = [[Rat(x) for x in v] for v in full_vectors]

    nu_cols: list[tuple[Rat, ...]] = []
    nu_literal = True
    for e, p in zip(del_basis["elements"], del_basis["polys"]):
        image = poly_mul(p, poly_from_linear(va_form))
        i = index_full.get(e.bset | {a})
        if i is None or image != full["polys"][i]:
            nu_literal = False
        got = in_span(list(poly_vector(image, k, degree)), full_cols)
        if got is None:
            raise ValueError("nu image escaped the multiplicity basis span")
        nu_cols.append(got)

    con_vectors = [
        poly_vector(p, qframe.dim, con_basis["degree"]) for p in con_basis["polys"]
    ]
    con_cols = [[Rat(x) for x in v] for v in con_vectors]
    pi_cols: list[tuple[Rat, ...]] = []
    pi_literal = True
    for e, p in zip(full["elements"], full["polys"]):
        image = substitute_out(p, pivot, subst)
        if a in e.bset:
            if image:
                pi_literal = False
        else:
            i = index_con.get(e.bset)
            if i is None or image != con_basis["polys"][i]:
                pi_literal = False
        if not con_cols:
            if image:
                raise ValueError("pi image escaped the multiplicity basis span")
            pi_cols.append(())
            continue
        got = in_span(list(poly_vector(image, qframe.dim, con_basis["degree"])), con_cols)
        if got is None:
            raise ValueError("pi image escaped the multiplicity basis span")
        pi_cols.append(got)

    nu_pattern = all(
        list(col) == [Rat(1) if i == index_full.get(e.bset | {a}) else Rat(0) for i in range(len(full["elements"]))]
        for e, col in zip(del_basis["elements"], nu_cols)
    )
    pi_pattern = all(
        list(col)
        == [
            Rat(1) if (a not in e.bset and i == index_con.get(e.bset)) else Rat(0)
            for i in range(len(con_basis["elements"]))
        ]
        for e, col in zip(full["elements"], pi_cols)
    )

    rank_nu = (
        rank(QMatrix.from_rows([list(c) for c in nu_cols])) if nu_cols else 0
    )
    rank_pi = (
        rank(QMatrix.from_rows([list(c) for c in pi_cols]))
        if pi_cols and con_cols
        else 0
    )
    compose_zero = True
    for col in nu_cols:
        acc = [Rat(0)] * len(con_basis["elements"])
        for i, c in enumerate(col):
            if c:
                for r_i, v in enumerate(pi_cols[i]):
                    acc[r_i] += c * v
        if any(acc):
            compose_zero = False
    kernel_dim = len(full["elements"]) - rank_pi
    exact = (
        compose_zero
        and rank_nu == len(del_basis["elements"])
        and kernel_dim == rank_nu
        and rank_nu + rank_pi == len(full["elements"])
    )
    return {
        "ok": del_basis["ok"]
        and con_basis["ok"]
        and nu_literal
        and pi_literal
        and nu_pattern
        and pi_pattern
        and exact,
        "nu_matrix": nu_cols,
        "pi_matrix": pi_cols,
        "nu_literal": nu_literal,
        "pi_literal": pi_literal,
        "nu_pattern_ok": nu_pattern,
        "pi_pattern_ok": pi_pattern,
        "compose_zero": compose_zero,
        "exact": exact,
        "ranks": (rank_nu, rank_pi),
        "counts": (
            len(del_basis["elements"]),
            len(full["elements"]),
            len(con_basis["elements"]),
        ),
        "full": full,
        "deletion": del_basis,
        "contraction": con_basis,
    }


def diagram_check(matroid: Matroid, element: int) -> dict:
    """Compatibility of the polynomial and homology exact sequences.

    In the beta-nbc index bases, nu must be the transpose of the delta
    homology matrix, and pi scaled by the sign of the ground level must
    be the transpose of the sign-scaled epsilon matrix; with both rows
    scaled the same way those reduce to nu = transpose(delta) and
    pi = transpose(epsilon), checked entry by entry.
    """
    maps = nu_pi_report(matroid, element)
    hom = homology_maps_report(matroid, element)
    n_del, n_full, n_con = maps["counts"]
    eps = hom["epsilon_matrix"]  # columns over full index, one per contraction element
    dlt = hom["delta_matrix"]  # columns over deletion index, one per full element
    nu_ok = all(
        maps["nu_matrix"][j][i] == dlt[i][j]
        for j in range(n_del)
        for i in range(n_full)
    )
    pi_ok = all(
        maps["pi_matrix"][j][i] == eps[i][j]
        for j in range(n_full)
        for i in range(n_con)
    )
    return {
        "ok": maps["ok"] and hom["ok"] and nu_ok and pi_ok,
        "nu_transpose_of_delta": nu_ok,
        "pi_transpose_of_epsilon": pi_ok,
        "maps": maps,
        "homology": hom,
    }


def uniform_symmetric_basis_check(r: int, n: int, seed: int = 0) -> dict:
    """For a generic uniform matroid the x_B span the full symmetric power.

    The count of beta-nbc sets equals the dimension of the degree
    n-r-1 symmetric power of the rank r span, so the certificate is a
    square full-rank check.  For a uniform matroid every chain factor
    is a plain column form, so each x_B must literally equal the
    product of the column forms over B minus its least element; that
    product identity is checked too.
    """
    m = generic_uniform_matroid(r, n, seed)
    lat = build_tflats(m)
    basis = multiplicity_basis(m, lat, m.ground)
    frame = basis["frame"]
    products_match = True
    for e, p in zip(basis["elements"], basis["polys"]):
        prod = poly_one(frame.dim)
        for b in sorted(e.bset - {min(e.bset)}):
            prod = poly_mul(prod, poly_from_linear(frame.coords(m.column(b))))
        if prod != p:
            products_match = False
    space_dim = len(monomial_exponents(r, n - r - 1))
    return {
        "ok": basis["ok"] and basis["count"] == space_dim and products_match,
        "count": basis["count"],
        "space_dim": space_dim,
        "rank": basis["rank"],
        "products_match": products_match,
        "r": r,
        "n": n,
        "seed": seed,
    }
