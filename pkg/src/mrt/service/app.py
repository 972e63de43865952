"""HTTP service exposing the matroid toolkit.

Every computation endpoint accepts a presentation matrix (text or
structured rows), answers with a versioned report envelope, and maps
bad input to status 400 with a positioned message.  The `verify`
endpoint always answers 200; its `ok` flag carries the outcome.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..dotgen import poset_dot
from ..ingest import Ingested, ParseError, ingest_rows, ingest_text, matrix_digest
from ..matroid import Matroid
from ..reports import (
    basis_report,
    beta_report,
    bnbc_report,
    circuits_report,
    gen_uniform_report,
    homology_report,
    tflats_report,
    verify_report,
)
from ..tflats import build_tflats
from .models import GenUniformPayload, MatrixPayload, Report, TflatsPayload

__all__ = ["create_app"]


def _ingest(payload: MatrixPayload) -> tuple[Matroid, str, Ingested]:
    if payload.text is not None:
        ing = ingest_text(payload.text)
    else:
        ing = ingest_rows(payload.rows, payload.variables)
    return Matroid.from_matrix(ing.coefficients), matrix_digest(ing), ing


def create_app() -> FastAPI:
    app = FastAPI(
        title="matroid resolution toolkit",
        description=(
            "Circuits, T-flat lattices, beta invariants, broken-circuit "
            "homology, and multiplicity-space bases of a presentation "
            "matrix, over exact rational arithmetic."
        ),
        version="1.0.0",
    )

    @app.exception_handler(ParseError)
    async def _parse_error(_: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"message": exc.message, "row": exc.row, "col": exc.col},
        )

    @app.exception_handler(ValueError)
    async def _value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"message": str(exc)})

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/circuits", response_model=Report)
    async def circuits(payload: MatrixPayload) -> dict:
        m, digest, _ = _ingest(payload)
        return circuits_report(m, digest)

    @app.post("/tflats", response_model=Report)
    async def tflats(payload: TflatsPayload) -> dict:
        m, digest, _ = _ingest(payload)
        lattice = build_tflats(m)
        report = tflats_report(m, lattice, digest)
        if payload.dot:
            target = payload.tflat if payload.tflat is not None else sorted(m.ground)
            report["results"]["dot"] = poset_dot(m, lattice, target)
        return report

    @app.post("/beta", response_model=Report)
    async def beta(payload: MatrixPayload) -> dict:
        m, digest, _ = _ingest(payload)
        return beta_report(m, build_tflats(m), payload.tflat, digest)

    @app.post("/bnbc", response_model=Report)
    async def bnbc(payload: MatrixPayload) -> dict:
        m, digest, _ = _ingest(payload)
        return bnbc_report(m, build_tflats(m), payload.tflat, digest)

    @app.post("/homology", response_model=Report)
    async def homology(payload: MatrixPayload) -> dict:
        m, digest, _ = _ingest(payload)
        return homology_report(m, payload.tflat, digest)

    @app.post("/basis", response_model=Report)
    async def basis(payload: MatrixPayload) -> dict:
        m, digest, _ = _ingest(payload)
        return basis_report(m, build_tflats(m), payload.tflat, digest)

    @app.post("/verify", response_model=Report)
    async def verify(payload: MatrixPayload) -> dict:
        m, digest, _ = _ingest(payload)
        return verify_report(m, digest)

    @app.post("/gen-uniform", response_model=Report)
    async def gen_uniform(payload: GenUniformPayload) -> dict:
        return gen_uniform_report(payload.r, payload.n, payload.seed)

    return app
