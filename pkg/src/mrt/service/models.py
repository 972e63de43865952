"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

__all__ = [
    "MatrixPayload",
    "TflatsPayload",
    "GenUniformPayload",
    "Check",
    "Report",
    "ErrorMessage",
]


class MatrixPayload(BaseModel):
    """A presentation matrix, as raw text or structured rows.

    Exactly one of `text` (the plain-text or JSON file format) and
    `rows` (entry strings or integers) must be given.  `tflat` selects
    the subset the command acts on where applicable; the default is the
    whole ground set.
    """

    text: str | None = None
    rows: list[list[int | str]] | None = None
    variables: list[str] | None = None
    tflat: list[int] | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "MatrixPayload":
        if (self.text is None) == (self.rows is None):
            raise ValueError("provide exactly one of `text` or `rows`")
        return self


class TflatsPayload(MatrixPayload):
    """Lattice request; `dot` additionally renders the chain-walk poset."""

    dot: bool = False


class GenUniformPayload(BaseModel):
    r: int = Field(ge=1)
    n: int = Field(ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _r_at_most_n(self) -> "GenUniformPayload":
        if self.r > self.n:
            raise ValueError("need r <= n")
        return self


class Check(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class Report(BaseModel):
    """Envelope every command returns; `results` is typed per command."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(alias="schema")
    command: str
    input_digest: str | None
    ok: bool
    results: dict


class ErrorMessage(BaseModel):
    message: str
    row: int | None = None
    col: int | None = None
