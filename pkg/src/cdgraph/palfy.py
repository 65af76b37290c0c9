"""The three-vertex growth condition on degree graphs of solvable groups.

A graph satisfies Pálfy's condition when every set of three vertices spans at
least one edge.  Graphs with fewer than three vertices satisfy it vacuously.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph


def palfy_witness(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first vertex triple spanning no edge, or None."""
    for a, b, c in combinations(range(g.n), 3):
        if (a, b) not in g.edges and (a, c) not in g.edges and (b, c) not in g.edges:
            return (a, b, c)
    return None


def satisfies_palfy(g: Graph) -> bool:
    return palfy_witness(g) is None
