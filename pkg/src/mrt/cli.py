"""Command-line client for the toolkit.

Every subcommand builds a request payload, posts it to the HTTP
service — an in-process instance by default, or a remote base URL via
``--server`` — and formats the JSON report for the terminal.  Output is
byte-identical across runs for a fixed input and seed: reports are
serialized with sorted keys, and every list in them already has a
documented canonical order.

Exit codes: 0 success (all checks verified), 1 a report came back with
``ok`` false (a verification failure), 2 usage, parse, or precondition
errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import re
import sys
from pathlib import Path
from typing import Callable, Iterable, Sequence

import httpx

from .service.app import create_app

__all__ = ["main"]


# ---------------------------------------------------------------------------
# argument parsing


def _parse_elements(text: str) -> list[int]:
    tokens = [tok for tok in re.split(r"[,\s]+", text.strip()) if tok]
    if not tokens:
        raise argparse.ArgumentTypeError(
            "expected a list of elements such as '2,3,4,5'"
        )
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad element list {text!r}: entries must be integers"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrt",
        description=(
            "circuits, T-flats, beta invariants, beta-nbc tables, broken-circuit "
            "homology, and multiplicity-space bases of the column matroid of a "
            "presentation matrix"
        ),
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        help="base URL of a running service; by default the service runs in process",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def matrix_command(name: str, help_: str, tflat_help: str | None = None):
        cmd = sub.add_parser(name, help=help_)
        cmd.add_argument(
            "--input",
            metavar="FILE",
            help="matrix file, plain text or JSON ('-' or omitted reads stdin)",
        )
        if tflat_help is not None:
            cmd.add_argument(
                "--tflat", metavar="A", type=_parse_elements, help=tflat_help
            )
        cmd.add_argument(
            "--json", action="store_true", help="emit the full JSON report"
        )
        return cmd

    matrix_command("circuits", "list the circuits of the column matroid")
    tflats = matrix_command(
        "tflats",
        "list the lattice of T-flats (unions of circuits)",
        "draw the chain diagram of the cone below this T-flat",
    )
    tflats.add_argument(
        "--dot",
        metavar="FILE",
        help="write the labeled chain diagram in DOT format ('-' prints it instead "
        "of the table)",
    )
    matrix_command(
        "beta",
        "compute the beta invariant four independent ways",
        "restrict to this subset of the ground set",
    )
    matrix_command(
        "bnbc",
        "tabulate the beta-nbc sets of every positive-level T-flat",
        "tabulate a single T-flat instead",
    )
    matrix_command(
        "homology",
        "integral reduced homology of the dual broken-circuit complex",
        "restrict to this subset of the ground set",
    )
    matrix_command(
        "basis",
        "multiplicity-space basis polynomials for a T-flat",
        "T-flat to resolve (default: the full ground set)",
    )
    matrix_command("verify", "run every cross-check and report pass/fail per check")

    gen = sub.add_parser(
        "gen-uniform",
        help="emit a generic integer matrix whose column matroid is uniform",
    )
    gen.add_argument("r", type=int, help="rank (number of rows)")
    gen.add_argument("n", type=int, help="number of columns")
    gen.add_argument("--seed", type=int, default=0, metavar="N")
    gen.add_argument("--json", action="store_true", help="emit the full JSON report")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


# ---------------------------------------------------------------------------
# transport


def _post(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    if server:
        resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
        return resp.status_code, resp.json()

    async def in_process() -> tuple[int, dict]:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://mrt"
        ) as client:
            resp = await client.post(path, json=payload)
            return resp.status_code, resp.json()

    return asyncio.run(in_process())


def _read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _print_error(status: int, body) -> int:
    if isinstance(body, dict) and "message" in body:
        message = body["message"]
        if body.get("row") is not None:
            message += f" (row {body['row']}, col {body['col']})"
        print(f"error: {message}", file=sys.stderr)
    else:
        print(f"error: service returned status {status}: {body}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# terminal rendering


def _fmt_set(elements: Iterable[int]) -> str:
    return "{" + ",".join(str(e) for e in elements) + "}"


def _fmt_poly(pairs: Sequence[Sequence], frame: Sequence[int]) -> str:
    if not pairs:
        return "0"
    terms = []
    for exps, coeff in pairs:
        powers = [
            f"t{label}" + (f"^{e}" if e > 1 else "")
            for label, e in zip(frame, exps)
            if e
        ]
        if not powers:
            terms.append(coeff)
        elif coeff == "1":
            terms.append("*".join(powers))
        elif coeff == "-1":
            terms.append("-" + "*".join(powers))
        else:
            terms.append(coeff + "*" + "*".join(powers))
    out = terms[0]
    for term in terms[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def _render_circuits(results: dict) -> list[str]:
    lines = [
        "ground: " + _fmt_set(results["ground"]),
        f"rank: {results['rank']}",
        f"circuits ({len(results['circuits'])}):",
    ]
    lines.extend("  " + _fmt_set(c) for c in results["circuits"])
    return lines


def _render_tflats(results: dict) -> list[str]:
    lines = [f"T-flats ({results['count']}):"]
    for row in results["tflats"]:
        connectivity = "connected" if row["connected"] else "disconnected"
        covers = " ".join(_fmt_set(c) for c in row["lower_covers"])
        tail = f"  covers {covers}" if covers else ""
        lines.append(
            f"  level {row['level']}  {_fmt_set(row['members'])}  {connectivity}{tail}"
        )
    return lines


def _render_beta(results: dict) -> list[str]:
    kind = "T-flat" if results["is_tflat"] else "not a T-flat"
    connectivity = "connected" if results["connected"] else "disconnected"

    def cell(value) -> str:
        return "-" if value is None else str(value)

    return [
        f"subset: {_fmt_set(results['subset'])} ({kind}, {connectivity})",
        f"  flats formula:           {cell(results['crapo'])}",
        f"  deletion-contraction:    {cell(results['deletion_contraction'])}",
        f"  chain-space dimension:   {cell(results['dim_tspace'])}",
        f"  beta-nbc count:          {cell(results['bnbc_count'])}",
        "agree: " + ("yes" if results["agree"] else "NO"),
    ]


def _render_bnbc(results: dict) -> list[str]:
    rows = results["rows"]
    width = max((len(_fmt_set(r["tflat"])) for r in rows), default=1)
    lines = [f"beta-nbc sets per T-flat ({len(rows)} rows):"]
    for row in rows:
        sets = " ".join(_fmt_set(b) for b in row["sets"]) or "(none)"
        lines.append(
            f"  {_fmt_set(row['tflat']):<{width}}  level {row['level']}  {sets}"
        )
    return lines


def _render_homology(results: dict) -> list[str]:
    lines = [f"subset: {_fmt_set(results['subset'])}"]
    if results["void"]:
        lines.append("the complex is void; every reduced homology group vanishes")
        return lines
    lines.append(f"complex dimension: {results['complex_dim']}")
    for group in results["groups"]:
        line = f"  degree {group['degree']:>2}: betti {group['betti']}"
        if group["torsion"]:
            line += "  torsion " + " ".join(str(t) for t in group["torsion"])
        lines.append(line)
    return lines


def _render_basis(results: dict) -> list[str]:
    frame = results["frame"]
    lines = [
        f"T-flat: {_fmt_set(results['tflat'])}",
        "frame columns: " + " ".join(str(c) for c in frame),
        f"degree: {results['degree']}",
        f"dimension {results['dim']}, elements {results['count']}, rank {results['rank']}",
    ]
    for elem in results["elements"]:
        labels = ",".join(str(v) for v in elem["labels"])
        poly = _fmt_poly(elem["polynomial"], frame)
        lines.append(f"  B={_fmt_set(elem['bset'])}  labels {labels}  x = {poly}")
    if results["chain_discrepancies"]:
        flagged = " ".join(_fmt_set(b) for b in results["chain_discrepancies"])
        lines.append(f"chains with differing factor products: {flagged}")
    return lines


def _render_verify(results: dict) -> list[str]:
    checks = results["checks"]
    lines = []
    for check in checks:
        status = "PASS" if check["ok"] else "FAIL"
        detail = f"  {check['detail']}" if check.get("detail") else ""
        lines.append(f"{status} {check['name']}{detail}")
    failed = sum(1 for c in checks if not c["ok"])
    verdict = "ok" if failed == 0 else "FAILED"
    lines.append(
        f"verification: {verdict} ({len(checks) - failed}/{len(checks)} checks passed)"
    )
    return lines


_MATRIX_COMMANDS: dict[str, tuple[str, Callable[[dict], list[str]]]] = {
    "circuits": ("/circuits", _render_circuits),
    "tflats": ("/tflats", _render_tflats),
    "beta": ("/beta", _render_beta),
    "bnbc": ("/bnbc", _render_bnbc),
    "homology": ("/homology", _render_homology),
    "basis": ("/basis", _render_basis),
    "verify": ("/verify", _render_verify),
}


# ---------------------------------------------------------------------------
# dispatch


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    if args.command == "gen-uniform":
        status, body = _post(
            args.server, "/gen-uniform", {"r": args.r, "n": args.n, "seed": args.seed}
        )
        if status != 200:
            return _print_error(status, body)
        if args.json:
            print(json.dumps(body, indent=2, sort_keys=True))
        else:
            for row in body["results"]["rows"]:
                print(" ".join(row))
        return 0

    path, render = _MATRIX_COMMANDS[args.command]
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    payload: dict = {"text": text}
    tflat = getattr(args, "tflat", None)
    if tflat is not None:
        payload["tflat"] = tflat
    dot_target = getattr(args, "dot", None)
    if dot_target:
        payload["dot"] = True

    status, body = _post(args.server, path, payload)
    if status != 200:
        return _print_error(status, body)

    if dot_target == "-":
        print(body["results"]["dot"], end="")
    elif dot_target:
        Path(dot_target).write_text(body["results"]["dot"], encoding="utf-8")
        if args.json:
            print(json.dumps(body, indent=2, sort_keys=True))
        else:
            for line in render(body["results"]):
                print(line)
    elif args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        for line in render(body["results"]):
            print(line)

    return 0 if body.get("ok", True) else 1


if __name__ == "__main__":
    sys.exit(main())
