"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class GraphIn(BaseModel):
    """A graph given in exactly one of the two supported text formats."""

    edges: str | None = None
    graph6: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "GraphIn":
        if (self.edges is None) == (self.graph6 is None):
            raise ValueError("provide exactly one of 'edges' or 'graph6'")
        return self


class ProvenanceOut(BaseModel):
    rule: str
    citation: str


class ClassificationOut(BaseModel):
    status: Literal["occurs", "not_occurs", "unknown"]
    provenance: list[ProvenanceOut]


class ClassifyRequest(BaseModel):
    graph: GraphIn


class FamilyRequest(BaseModel):
    k: int = Field(ge=5)
    bridge: bool = False


class FamilyResponse(BaseModel):
    graph6: str
    edges: str


class AdmissibleRequest(BaseModel):
    graph: GraphIn
    vertex: int = Field(ge=0)
    strong: bool = False


class BlockingOut(BaseModel):
    graph6: str
    classification: ClassificationOut


class VerdictOut(BaseModel):
    verdict: Literal["yes", "no", "unknown"]
    blocking: BlockingOut | None


class ZsigmondyRequest(BaseModel):
    a: int = Field(ge=2)
    n: int = Field(ge=2)


class ZsigmondyResponse(BaseModel):
    base: int
    exponent: int
    primitive_primes: list[int]
    exception: str | None


class Lemma25Request(BaseModel):
    q: int = Field(ge=2)
    m: int = Field(ge=2)
    s: int = Field(ge=2)


class Lemma25Response(BaseModel):
    q: int
    m: int
    s: int
    quotient: int
    prime_divisors: list[int]
    result: bool


class EnumerateRequest(BaseModel):
    n: int = Field(ge=1)
    palfy_only: bool = False
    max_n: int | None = Field(default=None, ge=1)


class EnumerateResponse(BaseModel):
    n: int
    total_classes: int
    palfy_count: int
    verdict_histogram: dict[str, int]
    family_members: list[str]


class HealthResponse(BaseModel):
    status: str
    kb_facts: int


class KBFactOut(BaseModel):
    graph6: str
    status: str
    source: str


class KBResponse(BaseModel):
    path: str | None
    facts: list[KBFactOut]
