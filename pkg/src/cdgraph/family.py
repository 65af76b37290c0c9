"""The forbidden family: Pálfy-condition graphs that are provably not degree graphs.

A graph belongs to the family when it has at least five vertices, satisfies
Pálfy's condition, and contains two adjacent degree-two vertices p1, p2 with
no common neighbor.  Those hypotheses force the whole structure: writing q1
for p1's other neighbor and q2 for p2's, every remaining vertex must be
adjacent to q1, q2, and each other (otherwise some triple spans no edge), and
only the q1-q2 edge is free.  So for each vertex count there are exactly two
members, bridge and bridgeless; the generator below builds them directly from
the forced edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graphs import Graph, VertexSet, common_neighbors, degree, has_edge, neighbors, new_graph
from .palfy import satisfies_palfy


@dataclass(frozen=True)
class FamilyLabeling:
    """Vertex roles witnessing family membership."""

    p1: int
    p2: int
    q1: int
    q2: int
    others: VertexSet
    bridge: bool


def family_graph(k: int, bridge: bool = False) -> Graph:
    """The family member on k >= 5 vertices, with or without the q1-q2 edge.

    Vertices are labeled p1=0, p2=1, q1=2, q2=3; the rest form the complete
    block adjacent to both q1 and q2.
    """
    if k < 5:
        raise GraphError(f"family members need at least 5 vertices, got k={k}")
    edges = [(0, 1), (0, 2), (1, 3)]
    if bridge:
        edges.append((2, 3))
    for v in range(4, k):
        edges.append((2, v))
        edges.append((3, v))
        for w in range(4, v):
            edges.append((w, v))
    return new_graph(k, edges)


def is_in_family(g: Graph) -> FamilyLabeling | None:
    """Recognize family membership by checking only the defining hypotheses.

    Scans ordered pairs (p1, p2) in lexicographic order and returns the first
    labeling found, so the result is deterministic.  No structural check
    beyond the hypotheses is needed; the remaining edges are forced (see the
    module docstring), which the exhaustive n=5,6 tests confirm.
    """
    if g.n < 5 or not satisfies_palfy(g):
        return None
    for p1 in range(g.n):
        if degree(g, p1) != 2:
            continue
        for p2 in range(g.n):
            if p2 == p1 or degree(g, p2) != 2:
                continue
            if not has_edge(g, p1, p2):
                continue
            if common_neighbors(g, p1, p2):
                continue
            (q1,) = neighbors(g, p1) - {p2}
            (q2,) = neighbors(g, p2) - {p1}
            others = frozenset(range(g.n)) - {p1, p2, q1, q2}
            return FamilyLabeling(
                p1=p1,
                p2=p2,
                q1=q1,
                q2=q2,
                others=others,
                bridge=has_edge(g, q1, q2),
            )
    return None
