"""Graphviz DOT rendering of the chain-walk poset for one T-flat.

Draws the T-flats below the chosen one that contain its minimum,
with every cover edge.  Edges inspected by the chain walk carry their
label; an edge whose label failed the strict descent is dashed.
Output is deterministic for a fixed matroid and T-flat.
"""

from __future__ import annotations

from typing import Iterable

from .bcc import chain_edge_annotations
from .matroid import Matroid
from .tflats import TFlatLattice

__all__ = ["poset_dot"]


def _name(t: frozenset) -> str:
    return "{" + ",".join(str(x) for x in sorted(t)) + "}"


def poset_dot(matroid: Matroid, lattice: TFlatLattice, tflat: Iterable[int]) -> str:
    top = frozenset(tflat)
    if not lattice.is_tflat(top):
        raise ValueError(f"{sorted(top)} is not a T-flat")
    apex = min(top)
    member_set = {t for t in lattice.tflats if t <= top and apex in t}
    members = sorted(member_set, key=lambda t: (-lattice.level[t], tuple(sorted(t))))
    edges = sorted(
        (
            (upper, lower)
            for upper in member_set
            for lower in lattice.lower_covers[upper]
            if lower in member_set
        ),
        key=lambda e: (tuple(sorted(e[0])), tuple(sorted(e[1]))),
    )
    notes = chain_edge_annotations(matroid, lattice, top)
    lines = ["digraph chains {", "  rankdir=TB;", "  node [shape=plaintext];"]
    by_level: dict[int, list[frozenset]] = {}
    for t in members:
        by_level.setdefault(lattice.level[t], []).append(t)
    for lvl in sorted(by_level, reverse=True):
        row = " ".join(f'"{_name(t)}";' for t in by_level[lvl])
        lines.append(f"  {{ rank=same; {row} }}")
    for upper, lower in edges:
        attrs = []
        if (upper, lower) in notes:
            label, descending = notes[(upper, lower)]
            attrs.append(f'label="{label}"')
            if not descending:
                attrs.append("style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{_name(upper)}" -> "{_name(lower)}"{suffix};')
    lines.append("}")
    return "\n".join(lines) + "\n"
