"""Request and response models for the colouring service."""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GraphSource(BaseModel):
    """Exactly one graph source: inline DIMACS text or a family spec."""

    dimacs: str | None = None
    family: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> GraphSource:
        if (self.dimacs is None) == (self.family is None):
            raise ValueError("provide exactly one of dimacs or family")
        return self


class SpanRequest(GraphSource):
    tset: str | list[int]
    method: Literal["exact", "brute", "greedy"] = "exact"
    strategy: Literal["iterative", "binary"] = "iterative"
    budget_nodes: int | None = Field(default=None, gt=0)
    budget_secs: float | None = Field(default=None, gt=0)
    max_span: int | None = Field(default=None, ge=0)
    order: Literal["degree_desc", "id_asc", "random"] = "degree_desc"
    seed: int | None = None


class SpanPayload(BaseModel):
    """Mirror of the result JSON: keys in emit order, lambda first."""

    model_config = ConfigDict(populate_by_name=True)

    lambda_: int = Field(alias="lambda")
    method: str
    colours: list[int]
    tset: list[int]
    sigma: int
    nodes_explored: int
    elapsed_ms: float


class UnresolvedInfo(BaseModel):
    reason: str
    lower_bound: int | None = None
    upper_bound: int | None = None
    nodes_explored: int
    elapsed_ms: float


class SpanResponse(BaseModel):
    status: Literal["ok", "unresolved"]
    result: SpanPayload | None = None
    unresolved: UnresolvedInfo | None = None


class CheckRequest(GraphSource):
    tset: str | list[int]
    colours: list[int]


class ViolationPayload(BaseModel):
    kind: str
    u: int
    v: int
    detail: int


class CheckResponse(BaseModel):
    valid: bool
    violations: list[ViolationPayload]


class ConstructRequest(BaseModel):
    family: str
    tset: str | list[int]


class PredictionPayload(BaseModel):
    mode: Literal["exact", "strict_upper_bound"]
    value: int


class ConstructResponse(BaseModel):
    family: str
    colours: list[int]
    c_span: int
    valid: bool
    prediction: PredictionPayload | None = None
    upper_bound: int | None = None


class ComplementRequest(GraphSource):
    tset: str | list[int]
    colours: list[int]
    j: int = Field(default=0, ge=0)


class ComplementResponse(BaseModel):
    colours: list[int]
    original_span: int
    complement_span: int
    valid: bool


class AuditRequest(BaseModel):
    suite: Literal["stars", "kpartite", "remarks", "all"] = "all"
    max_r: int | None = Field(default=None, ge=1)
    max_n: int | None = Field(default=None, ge=1)
    budget_nodes: int | None = Field(default=None, gt=0)
    budget_secs: float | None = Field(default=None, gt=0)


class AuditRecordPayload(BaseModel):
    instance: str
    claim: str
    predicted: int | str
    exact: int | None
    agree: bool | None
    notes: str = ""


class AuditSummary(BaseModel):
    instances: int
    agreed: int
    discrepancies: int
    unresolved: int


class AuditResponse(BaseModel):
    suite: str
    records: list[AuditRecordPayload]
    summary: AuditSummary


class HealthResponse(BaseModel):
    status: str
    version: str
