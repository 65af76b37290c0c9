"""HTTP service exposing the classifier over a server-side knowledge base.

The knowledge base is loaded once at startup (explicit path, the CDGRAPH_KB
environment variable, or the shipped seed file, in that order) and shared by
all requests; everything else is stateless.  Error payloads carry a `kind`
field so thin clients can map them back to their own diagnostics:

    parse_error / cap_error / kb_error / precondition_error / budget_error
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas
from .admissibility import Verdict, is_admissible, is_strongly_admissible
from .classifier import Classification, classify
from .enumeration import DEFAULT_ENUM_CAP, enumerate_classify
from .errors import (
    FactorizationBudgetError,
    GraphError,
    KBError,
    PreconditionError,
    SizeCapError,
)
from .family import family_graph
from .graphs import Graph, format_edge_list, format_graph6, graph_from_bits, parse_graph
from .kb import KnowledgeBase, load_kb, seed_kb_path
from .numtheory import QuotientQuery, quotient_prime_divisors, quotient_value, lemma25_check, zsigmondy

_ERROR_KINDS = [
    (KBError, "kb_error", 409),
    (SizeCapError, "cap_error", 400),
    (GraphError, "parse_error", 400),
    (PreconditionError, "precondition_error", 400),
    (FactorizationBudgetError, "budget_error", 400),
]


def create_app(kb_path: str | Path | None = None) -> FastAPI:
    path = kb_path or os.environ.get("CDGRAPH_KB") or seed_kb_path()
    kb = load_kb(path)
    app = FastAPI(title="cdgraph", version="0.1.0")
    app.state.kb = kb
    app.state.kb_path = str(path)

    for exc_type, kind, status_code in _ERROR_KINDS:
        _register_handler(app, exc_type, kind, status_code)

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", kb_facts=len(kb))

    @app.get("/kb", response_model=schemas.KBResponse)
    def kb_contents() -> schemas.KBResponse:
        facts = [
            schemas.KBFactOut(
                graph6=format_graph6(graph_from_bits(key.n, key.bits)),
                status=fact.status.value,
                source=fact.source,
            )
            for key, fact in sorted(kb.facts.items())
        ]
        return schemas.KBResponse(path=app.state.kb_path, facts=facts)

    @app.post("/classify", response_model=schemas.ClassificationOut)
    def classify_graph(req: schemas.ClassifyRequest) -> schemas.ClassificationOut:
        g = _graph_from_input(req.graph)
        return _classification_out(classify(g, kb))

    @app.post("/family", response_model=schemas.FamilyResponse)
    def family(req: schemas.FamilyRequest) -> schemas.FamilyResponse:
        g = family_graph(req.k, req.bridge)
        return schemas.FamilyResponse(graph6=format_graph6(g), edges=format_edge_list(g))

    @app.post("/admissible", response_model=schemas.VerdictOut)
    def admissible(req: schemas.AdmissibleRequest) -> schemas.VerdictOut:
        g = _graph_from_input(req.graph)
        check = is_strongly_admissible if req.strong else is_admissible
        return _verdict_out(check(g, req.vertex, kb))

    @app.post("/zsigmondy", response_model=schemas.ZsigmondyResponse)
    def zsigmondy_primes(req: schemas.ZsigmondyRequest) -> schemas.ZsigmondyResponse:
        result = zsigmondy(req.a, req.n)
        return schemas.ZsigmondyResponse(
            base=result.base,
            exponent=result.exponent,
            primitive_primes=sorted(result.primitive_primes),
            exception=result.exception.value if result.exception else None,
        )

    @app.post("/lemma25", response_model=schemas.Lemma25Response)
    def lemma25(req: schemas.Lemma25Request) -> schemas.Lemma25Response:
        qq = QuotientQuery(q=req.q, m=req.m, s=req.s)
        return schemas.Lemma25Response(
            q=req.q,
            m=req.m,
            s=req.s,
            quotient=quotient_value(qq),
            prime_divisors=sorted(quotient_prime_divisors(qq)),
            result=lemma25_check(qq),
        )

    @app.post("/enumerate", response_model=schemas.EnumerateResponse)
    def enumerate_graphs(req: schemas.EnumerateRequest) -> schemas.EnumerateResponse:
        max_n = req.max_n if req.max_n is not None else DEFAULT_ENUM_CAP
        report = enumerate_classify(req.n, kb, req.palfy_only, max_n=max_n)
        return schemas.EnumerateResponse(**report.to_json_dict())

    return app


def _register_handler(app: FastAPI, exc_type: type, kind: str, status_code: int) -> None:
    @app.exception_handler(exc_type)
    async def handler(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse(
            status_code=status_code,
            content={"detail": {"kind": kind, "message": str(exc)}},
        )


def _graph_from_input(gi: schemas.GraphIn) -> Graph:
    if gi.edges is not None:
        return parse_graph(gi.edges, "edge-list")
    assert gi.graph6 is not None
    return parse_graph(gi.graph6, "graph6")


def _classification_out(c: Classification) -> schemas.ClassificationOut:
    return schemas.ClassificationOut(
        status=c.status.value,
        provenance=[
            schemas.ProvenanceOut(rule=rule, citation=citation)
            for rule, citation in c.provenance
        ],
    )


def _verdict_out(v: Verdict) -> schemas.VerdictOut:
    blocking = None
    if v.blocking is not None:
        sub, c = v.blocking
        blocking = schemas.BlockingOut(
            graph6=format_graph6(sub), classification=_classification_out(c)
        )
    return schemas.VerdictOut(verdict=v.value.value, blocking=blocking)


app = create_app()
