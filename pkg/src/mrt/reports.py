"""JSON-ready payloads for the command surface.

Every report is a plain dict: schema tag, command name, input digest,
a results object typed per command, and an overall ``ok`` flag.
Serialization is deterministic — element sets become sorted integer
arrays, rationals become strings, and list orders are canonical:
circuits and T-flats by (size, elements), table rows by (level
descending, elements), polynomial terms by exponent vector.
"""

from __future__ import annotations

from typing import Iterable

from .bcc import beta_nbc, homology, reduced_bc_complex
from .genuniform import generic_uniform_matrix
from .matroid import Matroid
from .multspace import Poly, multiplicity_basis
from .tflats import TFlatLattice, beta_crapo, beta_delcon, dim_tspace
from .verify import verify_matroid

__all__ = [
    "SCHEMA",
    "circuits_report",
    "tflats_report",
    "beta_report",
    "bnbc_report",
    "homology_report",
    "basis_report",
    "verify_report",
    "gen_uniform_report",
    "poly_pairs",
]

SCHEMA = "mrt.report/1"


def _sorted_sets(sets: Iterable[frozenset]) -> list[list[int]]:
    return [sorted(s) for s in sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))]


def poly_pairs(poly: Poly) -> list[list]:
    """A polynomial as sorted (exponent-vector, rational-string) pairs."""
    return [[list(exps), str(coeff)] for exps, coeff in sorted(poly.items())]


def _report(command: str, digest: str | None, results: dict, ok: bool = True) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "input_digest": digest,
        "ok": ok,
        "results": results,
    }


def circuits_report(m: Matroid, digest: str | None = None) -> dict:
    return _report(
        "circuits",
        digest,
        {
            "ground": sorted(m.ground),
            "rank": m.rank(),
            "circuits": _sorted_sets(m.circuits()),
        },
    )


def tflats_report(m: Matroid, lattice: TFlatLattice, digest: str | None = None) -> dict:
    rows = [
        {
            "members": sorted(t),
            "level": lattice.level[t],
            "connected": t in lattice.connected,
            "lower_covers": [sorted(c) for c in lattice.lower_covers[t]],
        }
        for t in lattice.tflats
    ]
    return _report(
        "tflats", digest, {"count": len(rows), "tflats": rows}
    )


def beta_report(
    m: Matroid,
    lattice: TFlatLattice,
    subset: Iterable[int] | None = None,
    digest: str | None = None,
) -> dict:
    sub = frozenset(subset) if subset is not None else m.ground
    if not sub <= m.ground:
        raise ValueError(f"{sorted(sub)} is not a subset of the ground set")
    restriction = m.restrict(sub)
    is_tflat = lattice.is_tflat(sub)
    crapo = beta_crapo(restriction)
    delcon = beta_delcon(restriction)
    dim = dim_tspace(lattice, sub) if is_tflat else None
    count = len(beta_nbc(m, lattice, sub)) if is_tflat else None
    values = [v for v in (crapo, delcon, dim, count) if v is not None]
    agree = len(set(values)) == 1
    return _report(
        "beta",
        digest,
        {
            "subset": sorted(sub),
            "is_tflat": is_tflat,
            "connected": restriction.is_connected(),
            "crapo": crapo,
            "deletion_contraction": delcon,
            "dim_tspace": dim,
            "bnbc_count": count,
            "agree": agree,
        },
        ok=agree,
    )


def bnbc_report(
    m: Matroid,
    lattice: TFlatLattice,
    tflat: Iterable[int] | None = None,
    digest: str | None = None,
) -> dict:
    if tflat is not None:
        top = frozenset(tflat)
        if not lattice.is_tflat(top):
            raise ValueError(f"{sorted(top)} is not a T-flat")
        tops = [top]
    else:
        tops = sorted(
            (t for t in lattice.tflats if lattice.level[t] >= 1),
            key=lambda t: (-lattice.level[t], tuple(sorted(t))),
        )
    rows = []
    for top in tops:
        elements = beta_nbc(m, lattice, top)
        rows.append(
            {
                "tflat": sorted(top),
                "level": lattice.level[top],
                "sets": [sorted(e.bset) for e in elements],
                "elements": [
                    {
                        "bset": sorted(e.bset),
                        "labels": list(e.labels),
                        "chain": [sorted(t) for t in e.chain],
                    }
                    for e in elements
                ],
            }
        )
    return _report("bnbc", digest, {"rows": rows})


def homology_report(
    m: Matroid, subset: Iterable[int] | None = None, digest: str | None = None
) -> dict:
    sub = frozenset(subset) if subset is not None else m.ground
    if not sub <= m.ground:
        raise ValueError(f"{sorted(sub)} is not a subset of the ground set")
    bc_matroid = m.restrict(sub).dual()
    komplex, shape = reduced_bc_complex(bc_matroid)
    groups = homology(komplex)
    return _report(
        "homology",
        digest,
        {
            "subset": sorted(sub),
            "complex_dim": komplex.dim,
            "void": shape["void"],
            "groups": [
                {
                    "degree": k,
                    "betti": groups[k].betti,
                    "torsion": list(groups[k].torsion),
                }
                for k in sorted(groups)
            ],
        },
    )


def basis_report(
    m: Matroid,
    lattice: TFlatLattice,
    tflat: Iterable[int] | None = None,
    digest: str | None = None,
) -> dict:
    top = frozenset(tflat) if tflat is not None else m.ground
    if not lattice.is_tflat(top):
        raise ValueError(f"{sorted(top)} is not a T-flat")
    basis = multiplicity_basis(m, lattice, top)
    elements = [
        {
            "bset": sorted(e.bset),
            "labels": list(e.labels),
            "chain": [sorted(t) for t in e.chain],
            "polynomial": poly_pairs(p),
        }
        for e, p in zip(basis["elements"], basis["polys"])
    ]
    return _report(
        "basis",
        digest,
        {
            "tflat": sorted(top),
            "frame": list(basis["frame"].labels),
            "degree": basis["degree"],
            "dim": basis["dim"],
            "count": basis["count"],
            "rank": basis["rank"],
            "elements": elements,
            "chain_discrepancies": [sorted(b) for b in basis["chain_discrepancies"]],
        },
        ok=basis["ok"],
    )


def verify_report(m: Matroid, digest: str | None = None) -> dict:
    """Run the full self-consistency audit and wrap it as a report.

    Every check row carries ``name``, ``ok``, and a human-readable
    ``detail``; the report's top-level ``ok`` is the conjunction.
    """
    outcome = verify_matroid(m)
    return _report("verify", digest, {"checks": outcome["checks"]}, ok=outcome["ok"])


def gen_uniform_report(r: int, n: int, seed: int = 0) -> dict:
    matrix = generic_uniform_matrix(r, n, seed)
    rows = [[str(entry) for entry in row] for row in matrix.rows]
    return _report(
        "gen-uniform",
        None,
        {"r": r, "n": n, "seed": seed, "rows": rows},
    )
