"""Shared oracles and builders for the test suite.

Everything here deliberately avoids the library's own conventions so that
agreement is meaningful: masks are read least-significant-bit first over
lexicographic pair order (the library uses most-significant first over
colexicographic order), isomorphism reduction is brute-force orbit minimum,
and the primitive-prime oracle scans multiplicative orders directly.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import sympy
from hypothesis import strategies as st

from cdgraph import Graph, new_graph


def lex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask_lsb(n: int, mask: int) -> Graph:
    pairs = lex_pairs(n)
    return new_graph(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Apply the vertex permutation v -> perm[v]."""
    return new_graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def orbit_min_classes(n: int) -> set[int]:
    """One minimal mask per isomorphism class, in the oracle's own encoding."""
    pairs = lex_pairs(n)
    idx = {p: k for k, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen: set[int] = set()
    reps: set[int] = set()
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        orbit = set()
        for perm in perms:
            t = 0
            for k, (i, j) in enumerate(pairs):
                if mask >> k & 1:
                    a, b = perm[i], perm[j]
                    if a > b:
                        a, b = b, a
                    t |= 1 << idx[(a, b)]
            orbit.add(t)
        seen |= orbit
        reps.add(min(orbit))
    return reps


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def nx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def primitive_primes_oracle(a: int, n: int) -> frozenset[int]:
    """Primes dividing a^n - 1 whose multiplicative order at a is exactly n,
    found by scanning every smaller exponent."""
    return frozenset(
        p
        for p in sympy.primefactors(a**n - 1)
        if all(pow(a, k, p) != 1 for k in range(1, n))
    )


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << npairs) - 1))
    return graph_from_mask_lsb(n, mask)


@st.composite
def graphs_with_permutation(draw, min_n: int = 1, max_n: int = 7):
    g = draw(graphs(min_n, max_n))
    perm = tuple(draw(st.permutations(range(g.n))))
    return g, perm
