"""Three-valued rule engine deciding whether a graph can be a degree graph.

Rules fire in a fixed order and the first hit wins:

  R1  Pálfy's condition fails            -> does not occur
  R2  forbidden-family membership        -> does not occur
  R3  knowledge-base fact                -> the fact's status

A definite "occurs" can only ever come from the knowledge base; the rules can
only exclude.  When no rule fires the verdict is unknown, which is an honest
answer, not an error.  A knowledge-base fact claiming "occurs" for a graph R1
or R2 rejects is a contradiction between reference data and theorem, reported
as an inconsistency error rather than silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .errors import KBInconsistencyError, SizeCapError
from .family import is_in_family
from .graphs import DEFAULT_SIZE_CAP, Graph, canonical_key
from .palfy import palfy_witness

if TYPE_CHECKING:  # import cycle: kb.py uses Status from here
    from .kb import Fact, KnowledgeBase


class Status(Enum):
    OCCURS = "occurs"
    DOES_NOT_OCCUR = "not_occurs"
    UNKNOWN = "unknown"


RULE_PALFY = "R1"
RULE_FAMILY = "R2"
RULE_KB = "R3"

ProvenanceEntry = tuple[str, str]  # (rule id, citation text)


@dataclass(frozen=True)
class Classification:
    status: Status
    provenance: tuple[ProvenanceEntry, ...]


def classify(g: Graph, kb: "KnowledgeBase", *, max_n: int = DEFAULT_SIZE_CAP) -> Classification:
    """Apply R1, R2, R3 in order; raises KBInconsistencyError on contradiction."""
    if g.n > max_n:
        raise SizeCapError(f"classification capped at {max_n} vertices, graph has {g.n}")
    fact: "Fact | None" = None
    if kb.facts:
        fact = kb.facts.get(canonical_key(g, max_n=max_n))

    triple = palfy_witness(g)
    if triple is not None:
        _reject_occurs_fact(fact, RULE_PALFY)
        citation = (
            f"Pálfy's condition fails: vertices {triple[0]}, {triple[1]}, {triple[2]}"
            " span no edge, but in the degree graph of a solvable group every"
            " three vertices include two adjacent ones"
        )
        return Classification(Status.DOES_NOT_OCCUR, ((RULE_PALFY, citation),))

    labeling = is_in_family(g)
    if labeling is not None:
        _reject_occurs_fact(fact, RULE_FAMILY)
        citation = (
            f"Theorem 3.1: a graph on {g.n} >= 5 vertices satisfying Pálfy's"
            f" condition with adjacent degree-two vertices {labeling.p1} and"
            f" {labeling.p2} sharing no common neighbor is not the degree graph"
            " of any solvable group"
        )
        return Classification(Status.DOES_NOT_OCCUR, ((RULE_FAMILY, citation),))

    if fact is not None:
        return Classification(fact.status, ((RULE_KB, fact.source),))
    return Classification(Status.UNKNOWN, ())


def explain(c: Classification) -> str:
    """Human-readable verdict plus one line per fired rule."""
    lines = [f"status: {c.status.value}"]
    if c.provenance:
        lines.extend(f"{rule}: {citation}" for rule, citation in c.provenance)
    else:
        lines.append("no applicable rule")
    return "\n".join(lines)


def _reject_occurs_fact(fact: "Fact | None", rule: str) -> None:
    if fact is not None and fact.status.value == "occurs":
        raise KBInconsistencyError(
            f"knowledge base claims this graph occurs ({fact.source}), but rule"
            f" {rule} proves it does not"
        )
