"""Parsing of presentation matrices from text or JSON.

Entries are either rationals ("3", "-1/2") or signed monomial terms
("x^3", "2*x*y^2", "-3/2*z").  Monomials are evaluated with every
variable set to 1, so the coefficient matrix used downstream is purely
rational; the exponent vectors are kept only for display.

Text format: one matrix row per line, entries separated by whitespace,
with an optional leading line "variables: x y" declaring names.  JSON
format: an object {"rows": [[...], ...], "variables": [...]} or a bare
array of rows; entries may be strings or integers.  Without a declared
variable list, juxtaposed single letters are read as separate
variables ("xy^2" is x * y^2); with one, names are matched longest
first, so multi-letter variables need no separators either.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass

from .exactq import QMatrix, Rat

__all__ = [
    "ParseError",
    "Ingested",
    "ingest_text",
    "ingest_rows",
    "ingest_path",
    "matrix_digest",
]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    """Invalid input, with the 1-based row and column when known."""

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        place = ""
        if row is not None:
            place = f" (row {row}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + place)
        self.message = message
        self.row = row
        self.col = col


@dataclass(frozen=True)
class Ingested:
    """A parsed presentation matrix and its rational evaluation."""

    raw_rows: tuple[tuple[str, ...], ...]
    variables: tuple[str, ...]
    coefficients: QMatrix
    multidegrees: tuple[tuple[tuple[int, ...], ...], ...]


def _parse_power_product(
    body: str, declared: tuple[str, ...] | None, row: int, col: int
) -> dict[str, int]:
    """Exponents of a product like x^2*y or, juxtaposed, x^2y."""
    powers: dict[str, int] = {}
    for chunk in body.split("*"):
        if not chunk:
            raise ParseError(f"empty factor in {body!r}", row, col)
        pos = 0
        while pos < len(chunk):
            name = None
            if declared:
                for cand in sorted(declared, key=len, reverse=True):
                    if chunk.startswith(cand, pos):
                        name = cand
                        break
                if name is None:
                    raise ParseError(
                        f"unknown variable at {chunk[pos:]!r} in {body!r}", row, col
                    )
            else:
                # undeclared: each letter is its own variable
                name = chunk[pos]
                if not name.isalpha():
                    raise ParseError(f"bad factor {chunk!r}", row, col)
            pos += len(name)
            exp = 1
            if pos < len(chunk) and chunk[pos] == "^":
                m = re.match(r"\^(\d+)", chunk[pos:])
                if not m:
                    raise ParseError(f"bad exponent in {chunk!r}", row, col)
                exp = int(m.group(1))
                pos += m.end()
            powers[name] = powers.get(name, 0) + exp
    return powers


def _parse_entry(
    token: str, declared: tuple[str, ...] | None, row: int, col: int
) -> tuple[Rat, dict[str, int]]:
    token = token.strip()
    if not token:
        raise ParseError("empty entry", row, col)
    if _RATIONAL.match(token):
        try:
            return Rat(token), {}
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {token!r}", row, col) from None
    # split an optional leading coefficient from the variable part
    m = re.match(r"^([+-]?(?:\d+(?:/\d+)?)?)\s*\*?\s*(.*)$", token)
    head, body = m.group(1), m.group(2)
    if not body:
        raise ParseError(f"cannot parse entry {token!r}", row, col)
    sign = Rat(-1) if head.startswith("-") else Rat(1)
    digits = head.lstrip("+-")
    try:
        coeff = sign * (Rat(digits) if digits else Rat(1))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient in {token!r}", row, col) from None
    powers = _parse_power_product(body, declared, row, col)
    return coeff, powers


def _finish(
    raw_rows: list[list[str]], declared: tuple[str, ...] | None
) -> Ingested:
    if not raw_rows or not raw_rows[0]:
        raise ParseError("matrix has no entries", 1, 1)
    width = len(raw_rows[0])
    parsed: list[list[tuple[Rat, dict[str, int]]]] = []
    for i, row in enumerate(raw_rows, start=1):
        if len(row) != width:
            raise ParseError(
                f"row has {len(row)} entries, expected {width}", i, len(row) + 1
            )
        parsed.append(
            [_parse_entry(tok, declared, i, j) for j, tok in enumerate(row, start=1)]
        )
    seen: list[str] = []
    for row in parsed:
        for _, powers in row:
            for name in powers:
                if name not in seen:
                    seen.append(name)
    variables = declared if declared is not None else tuple(sorted(seen))
    coeffs = QMatrix.from_rows([[c for c, _ in row] for row in parsed])
    degrees = tuple(
        tuple(tuple(powers.get(v, 0) for v in variables) for _, powers in row)
        for row in parsed
    )
    return Ingested(
        raw_rows=tuple(tuple(r) for r in raw_rows),
        variables=tuple(variables),
        coefficients=coeffs,
        multidegrees=degrees,
    )


def ingest_text(text: str) -> Ingested:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input", 1, 1)
    if stripped[0] in "[{":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
        if isinstance(data, list):
            rows, declared = data, None
        elif isinstance(data, dict):
            rows = data.get("rows")
            decl = data.get("variables")
            declared = tuple(decl) if decl is not None else None
        else:
            raise ParseError("JSON input must be an object or array")
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError("JSON rows must be an array of arrays")
        return ingest_rows(rows, declared)
    declared = None
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if lines and lines[0].lower().startswith("variables:"):
        declared = tuple(lines[0].split(":", 1)[1].split())
        lines = lines[1:]
    raw = [ln.split() for ln in lines]
    return _finish(raw, declared)


def ingest_rows(rows: list[list], variables: list[str] | tuple | None = None) -> Ingested:
    """Parse already-structured rows of entry strings or integers."""
    raw = [[str(x) for x in row] for row in rows]
    declared = tuple(variables) if variables is not None else None
    return _finish(raw, declared)


def ingest_path(path: str) -> Ingested:
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_text(fh.read())


def matrix_digest(ingested: Ingested) -> str:
    """Stable hex digest of the raw rows and variables."""
    blob = json.dumps(
        {"rows": [list(r) for r in ingested.raw_rows], "variables": list(ingested.variables)},
        sort_keys=True,
        separators=(",", ":"),
    ).encode()
    return hashlib.sha256(blob).hexdigest()
