"""Service endpoints: span solving, checking, construction, complement, audits.

Solver outcomes that are not plain answers stay structured: a budget overrun
returns status "unresolved" with the known bracket instead of an HTTP error,
while invalid inputs map to 400.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..audit import record_payload, run_suite, summarize
from ..checker import c_span, complement, validate
from ..core import Colouring, Graph, TSet
from ..families import (
    kpartite_colouring,
    kpartite_upper_bound,
    star_colouring,
    star_span_predicted,
)
from ..graphio import generate, parse_family_spec, parse_graph, parse_tset, result_payload
from ..solver import (
    Budget,
    BudgetExceededError,
    MaxSpanExceededError,
    brute_force_span,
    exact_span,
    greedy_upper_bound,
)
from .schemas import (
    AuditRequest,
    AuditResponse,
    AuditSummary,
    CheckRequest,
    CheckResponse,
    ComplementRequest,
    ComplementResponse,
    ConstructRequest,
    ConstructResponse,
    GraphSource,
    HealthResponse,
    PredictionPayload,
    SpanRequest,
    SpanResponse,
    UnresolvedInfo,
)

app = FastAPI(
    title="lt1span",
    version=__version__,
    description="L(t,1)-colouring: exact spans, validity checks, "
                "constructive colourings, and claim audits.",
)


def _tset(raw: str | list[int]) -> TSet:
    try:
        return parse_tset(raw) if isinstance(raw, str) else TSet(raw)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None


def _graph(src: GraphSource) -> Graph:
    try:
        if src.dimacs is not None:
            return parse_graph(src.dimacs)
        return generate(parse_family_spec(src.family))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None


def _budget(nodes: int | None, secs: float | None) -> Budget | None:
    if nodes is None and secs is None:
        return None
    default = Budget()
    return Budget(max_nodes=nodes if nodes is not None else default.max_nodes,
                  max_seconds=secs if secs is not None else default.max_seconds)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/span", response_model=SpanResponse, response_model_exclude_none=True)
def span(req: SpanRequest) -> SpanResponse:
    t = _tset(req.tset)
    g = _graph(req)
    try:
        if req.method == "exact":
            res = exact_span(g, t, budget=_budget(req.budget_nodes, req.budget_secs),
                             strategy=req.strategy)
        elif req.method == "brute":
            res = brute_force_span(g, t, req.max_span if req.max_span is not None else 12)
        else:
            res = greedy_upper_bound(g, t, order=req.order, seed=req.seed)
    except BudgetExceededError as e:
        return SpanResponse(status="unresolved", unresolved=UnresolvedInfo(
            reason=str(e), lower_bound=e.lower_bound, upper_bound=e.upper_bound,
            nodes_explored=e.nodes_explored, elapsed_ms=e.elapsed * 1000.0))
    except MaxSpanExceededError as e:
        return SpanResponse(status="unresolved", unresolved=UnresolvedInfo(
            reason=str(e), lower_bound=e.max_span + 1, upper_bound=None,
            nodes_explored=e.nodes_explored, elapsed_ms=e.elapsed * 1000.0))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None
    return SpanResponse(status="ok", result=result_payload(res, g, t))


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    t = _tset(req.tset)
    g = _graph(req)
    try:
        c = Colouring(req.colours)
        violations = validate(g, t, c)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None
    return CheckResponse(
        valid=not violations,
        violations=[{"kind": v.kind.value, "u": v.u, "v": v.v, "detail": v.detail}
                    for v in violations],
    )


@app.post("/construct", response_model=ConstructResponse,
          response_model_exclude_none=True)
def construct(req: ConstructRequest) -> ConstructResponse:
    t = _tset(req.tset)
    try:
        spec = parse_family_spec(req.family)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None
    if spec.kind == "star":
        try:
            colouring = star_colouring(spec.n, t)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e)) from None
        pred = star_span_predicted(spec.n, t)
        extras = {"prediction": PredictionPayload(mode=pred.mode.value,
                                                  value=pred.value)}
    elif spec.kind == "complete_multipartite":
        try:
            colouring = kpartite_colouring(spec.sizes, t)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e)) from None
        extras = {"upper_bound": kpartite_upper_bound(spec.sizes, t)}
    else:
        raise HTTPException(
            status_code=400,
            detail="construct supports star:<n> and kpartite:<sizes> only")
    violations = validate(generate(spec), t, colouring)
    return ConstructResponse(
        family=req.family,
        colours=list(colouring.colours),
        c_span=c_span(colouring),
        valid=not violations,
        **extras,
    )


@app.post("/complement", response_model=ComplementResponse)
def complement_route(req: ComplementRequest) -> ComplementResponse:
    t = _tset(req.tset)
    g = _graph(req)
    try:
        c = Colouring(req.colours)
        violations = validate(g, t, c)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None
    if violations:
        raise HTTPException(
            status_code=400,
            detail=f"input colouring is invalid ({len(violations)} violations); "
                   f"complement not emitted")
    out = complement(c, req.j)
    return ComplementResponse(
        colours=list(out.colours),
        original_span=c_span(c),
        complement_span=c_span(out),
        valid=not validate(g, t, out),
    )


@app.post("/audit", response_model=AuditResponse)
def audit(req: AuditRequest) -> AuditResponse:
    try:
        records = run_suite(req.suite, max_r=req.max_r, max_n=req.max_n,
                            budget=_budget(req.budget_nodes, req.budget_secs))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None
    return AuditResponse(
        suite=req.suite,
        records=[record_payload(r) for r in records],
        summary=AuditSummary(**summarize(records)),
    )
