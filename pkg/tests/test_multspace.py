"""Multiplicity-space tests against hand-computed fixture polynomials."""

import random

from fractions import Fraction

import pytest

from mrt.bcc import beta_nbc
from mrt.exactq import QMatrix, Rat
from mrt.genuniform import generic_uniform_matrix, generic_uniform_matroid
from mrt.matroid import Matroid
from mrt.multspace import (
    Frame,
    chain_linear_form,
    diagram_check,
    monomial_exponents,
    multiplicity_basis,
    multiplicity_polynomial,
    nu_pi_report,
    poly_add,
    poly_from_linear,
    poly_mul,
    poly_to_string,
    poly_vector,
    substitute_out,
    uniform_symmetric_basis_check,
)
from mrt.tflats import build_tflats, dim_tspace

FIX = QMatrix.from_rows(
    [
        [Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(2), Fraction(3), Fraction(1), Fraction(0)],
    ]
)


def fixture():
    return Matroid.from_matrix(FIX)


def top_frame(m):
    return Frame.from_basis_labels(m, m.lex_greatest_basis(m.ground))


def test_poly_arithmetic_and_vectorization():
    p = poly_from_linear([Rat(3), Rat(-2)])
    q = poly_from_linear([Rat(1), Rat(0)])
    prod = poly_mul(p, q)
    assert prod == {(2, 0): Rat(3), (1, 1): Rat(-2)}
    assert poly_add(prod, {(1, 1): Rat(2)}) == {(2, 0): Rat(3)}
    assert monomial_exponents(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert poly_vector(prod, 2, 2) == (Rat(0), Rat(-2), Rat(3))
    assert poly_to_string(prod) == "3*t1^2 - 2*t1*t2"
    assert poly_to_string({}) == "0"


def test_chain_linear_form_with_correction_terms():
    # step from {1,4} up to {1,2,3,4}: u = e2 - e3/2, landing on col1/2;
    # the unit coefficient sits at the smallest new label
    m = fixture()
    vec = chain_linear_form(m, {1, 2, 3, 4}, {1, 4})
    assert vec == (Fraction(1, 2), Fraction(1, 2))


def test_chain_linear_form_simple_steps():
    m = fixture()
    assert chain_linear_form(m, {1, 2, 3, 4}, {1, 2, 3}) == (Fraction(1), Fraction(1))
    assert chain_linear_form(m, {1, 2, 3, 4, 5}, {1, 2, 3, 4}) == (
        Fraction(1),
        Fraction(0),
    )
    with pytest.raises(ValueError):
        chain_linear_form(m, {1, 2, 3}, {1, 2, 3})


def test_fixture_multiplicity_polynomials():
    m = fixture()
    lat = build_tflats(m)
    frame = top_frame(m)
    assert frame.labels == (4, 5)
    elems = {tuple(sorted(e.bset)): e for e in beta_nbc(m, lat, m.ground)}
    x145 = multiplicity_polynomial(m, elems[(1, 4, 5)], frame)
    assert x145 == {(1, 1): Rat(1)}  # t1*t2, i.e. v4*v5
    x134 = multiplicity_polynomial(m, elems[(1, 3, 4)], frame)
    assert x134 == {(2, 0): Rat(3), (1, 1): Rat(-2)}  # v3*v4 = (3t1-2t2)*t1


def test_multiplicity_basis_all_fixture_tflats():
    m = fixture()
    lat = build_tflats(m)
    for tflat in lat.tflats:
        report = multiplicity_basis(m, lat, tflat)
        assert report["ok"], sorted(tflat)
        assert report["count"] == report["rank"] == dim_tspace(lat, tflat)


def test_multiplicity_basis_frame_invariant_rank():
    m = fixture()
    lat = build_tflats(m)
    other = Frame.from_basis_labels(m, [3, 5])
    report = multiplicity_basis(m, lat, m.ground, frame=other)
    assert report["ok"] and report["rank"] == 2


def test_substitute_out_matches_hand_values():
    # frame {4,5}: v5 = t2, so the quotient kills t2
    x134 = {(2, 0): Rat(3), (1, 1): Rat(-2)}
    x145 = {(1, 1): Rat(1)}
    assert substitute_out(x134, 1, (Rat(0),)) == {(2,): Rat(3)}
    assert substitute_out(x145, 1, (Rat(0),)) == {}
    # a substitution with an actual correction term
    p = poly_mul(poly_from_linear([Rat(1), Rat(1)]), poly_from_linear([Rat(0), Rat(1)]))
    assert substitute_out(p, 1, (Rat(2),)) == {(2,): Rat(6)}  # t2 -> 2*t1


def test_nu_pi_report_fixture():
    rep = nu_pi_report(fixture(), 5)
    assert rep["ok"]
    assert rep["counts"] == (1, 2, 1)
    assert rep["nu_literal"] and rep["pi_literal"]
    assert rep["nu_pattern_ok"] and rep["pi_pattern_ok"]
    assert rep["ranks"] == (1, 1)
    assert rep["compose_zero"] and rep["exact"]


def test_diagram_check_fixture():
    rep = diagram_check(fixture(), 5)
    assert rep["ok"]
    assert rep["nu_transpose_of_delta"] and rep["pi_transpose_of_epsilon"]


def test_diagram_check_random_represented():
    rng = random.Random(31)
    done = 0
    for _ in range(400):
        if done >= 6:
            break
        rows = rng.randint(2, 3)
        cols = rng.randint(3, 6)
        m = Matroid.from_matrix(
            QMatrix.from_rows(
                [
                    [Fraction(rng.randint(-3, 3)) for _ in range(cols)]
                    for _ in range(rows)
                ]
            )
        )
        if not m.is_connected() or len(m.ground) < 3:
            continue
        a = max(m.ground)
        if a in m.loops() or a in m.coloops():
            continue
        lat = build_tflats(m)
        if not lat.is_tflat(m.ground - {a}):
            continue
        rep = diagram_check(m, a)
        assert rep["ok"], (m.ground, a)
        done += 1
    assert done >= 6


def test_generic_uniform_matrix_certified_and_deterministic():
    m1 = generic_uniform_matrix(2, 5, seed=3)
    m2 = generic_uniform_matrix(2, 5, seed=3)
    assert m1.rows == m2.rows
    mat = generic_uniform_matroid(3, 6, seed=1)
    assert all(len(c) == 4 for c in mat.circuits())
    from math import comb

    assert len(mat.circuits()) == comb(6, 4)


def test_uniform_symmetric_basis_small_sweep():
    for r, n in [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6)]:
        rep = uniform_symmetric_basis_check(r, n, seed=0)
        assert rep["ok"], (r, n)
        from math import comb

        assert rep["count"] == comb(n - 2, r - 1) == rep["space_dim"]
