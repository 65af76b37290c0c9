"""Vertex admissibility: can a vertex be removed, in every edge-deletion sense,
without landing on a graph that occurs?

For a vertex v, the probe set of the plain check is the vertex deletion plus
every subgraph obtained by deleting a nonempty subset of v's incident edges.
The strong check also probes, after deleting v, every nonempty subset of the
edges that ran between v's former neighbors.  Each probe is classified by the
rule engine; the answers fold as a three-valued conjunction, and the verdict
carries the first blocking probe as a witness.  Probes are generated in a
fixed order (vertex deletion first, then edge subsets by binary counter over
the sorted edges), so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterable

from .classifier import Classification, Status, classify
from .errors import GraphError
from .graphs import DEFAULT_SIZE_CAP, Graph, delete_edges, delete_vertex, neighbors

if TYPE_CHECKING:
    from .kb import KnowledgeBase


class VerdictValue(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer.  blocking pairs the first offending probe with its
    classification: status occurs for a no, status unknown for an unknown,
    absent for a yes."""

    value: VerdictValue
    blocking: tuple[Graph, Classification] | None = None


def incident_edge_subgraphs(g: Graph, v: int) -> list[Graph]:
    """The 2^deg(v) - 1 graphs from deleting nonempty subsets of v's edges.

    The vertex set is unchanged; v may end up isolated.  Subsets run in
    binary-counter order over the incident edges sorted ascending.
    """
    incident = sorted(e for e in g.edges if v in e)
    return [delete_edges(g, subset) for subset in _nonempty_subsets(incident)]


def neighbor_edge_subgraphs(g: Graph, v: int) -> list[Graph]:
    """After deleting v, the graphs from deleting nonempty subsets of the edges
    that ran between v's neighbors.  Empty when the neighborhood spans no edge."""
    nbrs = neighbors(g, v)
    base = delete_vertex(g, v)

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    spanned = sorted(
        (shift(a), shift(b)) for a, b in g.edges if a in nbrs and b in nbrs
    )
    return [delete_edges(base, subset) for subset in _nonempty_subsets(spanned)]


def is_admissible(
    g: Graph, v: int, kb: "KnowledgeBase", *, max_n: int = DEFAULT_SIZE_CAP
) -> Verdict:
    """Yes iff the vertex deletion and every incident-edge deletion do not occur."""
    return _fold(_admissible_probes(g, v), kb, max_n)


def is_strongly_admissible(
    g: Graph, v: int, kb: "KnowledgeBase", *, max_n: int = DEFAULT_SIZE_CAP
) -> Verdict:
    """The admissibility probes plus the neighbor-edge deletions, conjoined."""
    def probes() -> Iterable[Graph]:
        yield from _admissible_probes(g, v)
        yield from neighbor_edge_subgraphs(g, v)

    return _fold(probes(), kb, max_n)


def _admissible_probes(g: Graph, v: int) -> Iterable[Graph]:
    if g.n < 2:
        raise GraphError("admissibility needs at least two vertices")
    yield delete_vertex(g, v)
    yield from incident_edge_subgraphs(g, v)


def _fold(probes: Iterable[Graph], kb: "KnowledgeBase", max_n: int) -> Verdict:
    """Three-valued conjunction over probe classifications, tracking first witnesses."""
    first_occurs: tuple[Graph, Classification] | None = None
    first_unknown: tuple[Graph, Classification] | None = None
    for sub in probes:
        c = classify(sub, kb, max_n=max_n)
        if c.status is Status.OCCURS and first_occurs is None:
            first_occurs = (sub, c)
        elif c.status is Status.UNKNOWN and first_unknown is None:
            first_unknown = (sub, c)
    if first_occurs is not None:
        return Verdict(VerdictValue.NO, first_occurs)
    if first_unknown is not None:
        return Verdict(VerdictValue.UNKNOWN, first_unknown)
    return Verdict(VerdictValue.YES)


def _nonempty_subsets(edges: list[tuple[int, int]]) -> Iterable[list[tuple[int, int]]]:
    for mask in range(1, 1 << len(edges)):
        yield [e for i, e in enumerate(edges) if mask >> i & 1]
