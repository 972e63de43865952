"""End-to-end verification of every computed invariant on one input.

Runs the full battery of cross-checks the library's identities promise,
over exact arithmetic, and returns a report of named checks.  A check
that does not apply to the input (for instance the deletion/contraction
comparisons, which need a connected matroid whose largest element is
neither a loop nor a coloop) is reported as passing with a detail
explaining why it was skipped.

Dependent one-element T-flats are degenerate: their multiplicity space
has dimension 1 with the empty-product basis while both beta routes
give 0, so the four-way agreement and the "beta vanishes exactly on
disconnected restrictions" property are asserted for T-flats with at
least two members, and singletons are checked against the degenerate
values directly.
"""

from __future__ import annotations

from .bcc import (
    beta_nbc,
    beta_nbc_by_activity,
    chain_decomposition_check,
    cycle_basis_certificate,
    homology,
    homology_maps_report,
    reduced_bc_complex,
)
from .matroid import Matroid
from .multspace import diagram_check, multiplicity_basis, nu_pi_report
from .tflats import TFlatLattice, beta_crapo, beta_delcon, build_tflats, dim_tspace

__all__ = ["verify_matroid"]


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def _skip(name: str, why: str) -> dict:
    return {"name": name, "ok": True, "detail": f"not applicable: {why}"}


def _circuit_minimality(m: Matroid) -> dict:
    bad = []
    for c in m.circuits():
        if m.is_independent(c):
            bad.append((sorted(c), "independent"))
        for x in c:
            if not m.is_independent(c - {x}):
                bad.append((sorted(c), f"subset without {x} dependent"))
    return _check("circuit_minimality", not bad, f"violations: {bad}" if bad else "")


def _union_closure(lattice: TFlatLattice) -> dict:
    members = set(lattice.tflats)
    missing_circuits = [c for c in lattice.matroid.circuits() if c not in members]
    bad_unions = []
    flats = lattice.tflats
    for i, a in enumerate(flats):
        for b in flats[i + 1 :]:
            if a | b not in members:
                bad_unions.append((sorted(a), sorted(b)))
    ok = not missing_circuits and not bad_unions
    return _check(
        "tflat_union_closure",
        ok,
        "" if ok else f"missing circuits {missing_circuits}, unions {bad_unions}",
    )


def _cover_levels(lattice: TFlatLattice) -> dict:
    bad = [
        (sorted(low), sorted(up))
        for up in lattice.tflats
        for low in lattice.lower_covers[up]
        if lattice.level[up] != lattice.level[low] + 1
    ]
    return _check("cover_level_step", not bad, f"violations: {bad}" if bad else "")


def _beta_checks(m: Matroid, lattice: TFlatLattice) -> list[dict]:
    four_bad, sign_bad, single_bad = [], [], []
    for t in lattice.tflats:
        restriction = m.restrict(t)
        crapo = beta_crapo(restriction) if not restriction.loops() else None
        delcon = beta_delcon(restriction)
        dim = dim_tspace(lattice, t)
        count = len(beta_nbc(m, lattice, t))
        if delcon < 0 or (crapo is not None and crapo < 0):
            sign_bad.append(sorted(t))
        if len(t) == 1:
            if not (dim == count == 1 and delcon == 0):
                single_bad.append(sorted(t))
            continue
        connected = t in lattice.connected
        if (delcon == 0) == connected:
            sign_bad.append(sorted(t))
        if connected and not (crapo == delcon == dim == count):
            four_bad.append((sorted(t), crapo, delcon, dim, count))
        if not connected and not (delcon == 0 and dim == 0 and count == 0):
            four_bad.append((sorted(t), crapo, delcon, dim, count))
    return [
        _check(
            "beta_four_way",
            not four_bad,
            f"violations: {four_bad}" if four_bad else "",
        ),
        _check(
            "beta_sign_and_connectivity",
            not sign_bad,
            f"violations: {sign_bad}" if sign_bad else "",
        ),
        _check(
            "dependent_singletons",
            not single_bad,
            f"violations: {single_bad}" if single_bad else "",
        ),
    ]


def _homology_checks(m: Matroid, lattice: TFlatLattice) -> list[dict]:
    rank_bad, torsion_bad, conc_bad = [], [], []
    for t in sorted(lattice.connected, key=lambda s: (len(s), tuple(sorted(s)))):
        komplex, _ = reduced_bc_complex(m.restrict(t).dual())
        groups = homology(komplex)
        top = m.level(t) - 1
        dim = dim_tspace(lattice, t)
        got = groups.get(top)
        if got is None or got.betti != dim:
            rank_bad.append((sorted(t), dim, got.betti if got else None))
        if any(g.torsion for g in groups.values()):
            torsion_bad.append(sorted(t))
        if any(k != top and g.betti for k, g in groups.items()):
            conc_bad.append(sorted(t))
    return [
        _check(
            "homology_rank_equals_dim",
            not rank_bad,
            f"violations: {rank_bad}" if rank_bad else "",
        ),
        _check(
            "homology_concentrated_top",
            not conc_bad,
            f"violations: {conc_bad}" if conc_bad else "",
        ),
        _check(
            "homology_torsion_free",
            not torsion_bad,
            f"violations: {torsion_bad}" if torsion_bad else "",
        ),
    ]


def _basis_checks(m: Matroid, lattice: TFlatLattice) -> list[dict]:
    basis_bad, cycle_bad, activity_bad = [], [], []
    for t in sorted(lattice.connected, key=lambda s: (len(s), tuple(sorted(s)))):
        report = multiplicity_basis(m, lattice, t)
        if not report["ok"]:
            basis_bad.append(sorted(t))
        cert = cycle_basis_certificate(m, lattice, t)
        if not cert["ok"]:
            cycle_bad.append(sorted(t))
        walk = {e.bset for e in beta_nbc(m, lattice, t)}
        direct = set(beta_nbc_by_activity(m.restrict(t).dual()))
        if walk != direct:
            activity_bad.append(sorted(t))
    return [
        _check(
            "multiplicity_basis_certified",
            not basis_bad,
            f"violations: {basis_bad}" if basis_bad else "",
        ),
        _check(
            "cycle_basis_certified",
            not cycle_bad,
            f"violations: {cycle_bad}" if cycle_bad else "",
        ),
        _check(
            "bnbc_activity_agreement",
            not activity_bad,
            f"violations: {activity_bad}" if activity_bad else "",
        ),
    ]


def _top_element_checks(m: Matroid, lattice: TFlatLattice) -> list[dict]:
    if len(m.ground) < 2:
        return [_skip("top_element_suite", "ground set smaller than 2")]
    a = max(m.ground)
    if a in m.loops() or a in m.coloops():
        return [_skip("top_element_suite", f"element {a} is a loop or coloop")]
    if not m.is_connected():
        return [_skip("top_element_suite", "matroid is disconnected")]
    out = []
    dec = chain_decomposition_check(m, a)
    detail = (
        f"counts full/del/con = {dec['counts']}"
        if "counts" in dec
        else "contraction carries all chains"
    )
    out.append(_check("chain_decomposition", dec["ok"], detail))
    if lattice.is_tflat(m.ground) and lattice.is_tflat(m.ground - {a}):
        maps = homology_maps_report(m, a)
        out.append(
            _check(
                "homology_exact_sequence",
                maps["ok"],
                f"counts con/full/del = {maps['counts']}",
            )
        )
        nupi = nu_pi_report(m, a)
        out.append(
            _check(
                "multiplicity_exact_sequence",
                nupi["ok"],
                f"ranks nu/pi = {nupi['ranks']}",
            )
        )
        diag = diagram_check(m, a)
        out.append(_check("dual_diagram_commutes", diag["ok"], ""))
    else:
        out.append(
            _skip(
                "homology_exact_sequence",
                "ground set or its deletion is not a T-flat",
            )
        )
    return out


def verify_matroid(m: Matroid) -> dict:
    """Run every applicable cross-check; ok only if all checks pass."""
    lattice = build_tflats(m)
    checks: list[dict] = [
        _circuit_minimality(m),
        _union_closure(lattice),
        _cover_levels(lattice),
    ]
    checks.extend(_beta_checks(m, lattice))
    checks.extend(_homology_checks(m, lattice))
    checks.extend(_basis_checks(m, lattice))
    checks.extend(_top_element_checks(m, lattice))
    return {"ok": all(c["ok"] for c in checks), "checks": checks}
