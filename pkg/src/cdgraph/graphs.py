"""Small undirected simple graphs on vertices 0..n-1.

Everything downstream (the growth condition, the forbidden family, the rule
engine) runs on graphs of at most ten or so vertices, so the representation is
a frozen value type and every operation is written for exactness rather than
asymptotics.  Canonical forms are the lexicographic minimum of an adjacency
encoding over all vertex relabelings, found by branch-and-bound.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphError, GraphFormatError, SizeCapError

# Permutation search is factorial in n; beyond this a call must opt in.
DEFAULT_SIZE_CAP = 10

Edge = tuple[int, int]
VertexSet = frozenset[int]


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph: vertex count plus a set of (u, v) pairs, u < v."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            u, v = e
            if not (0 <= u < v < self.n):
                raise GraphError(
                    f"edge {e!r} out of range for n={self.n} (need 0 <= u < v < n)"
                )

    def __repr__(self) -> str:
        return f"Graph({self.n}, {sorted(self.edges)})"


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph, normalizing edge endpoint order and dropping duplicates."""
    normalized = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u} not allowed")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(normalized))


def has_edge(g: Graph, u: int, v: int) -> bool:
    if u > v:
        u, v = v, u
    return (u, v) in g.edges


def neighbors(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    out = set()
    for a, b in g.edges:
        if a == v:
            out.add(b)
        elif b == v:
            out.add(a)
    return frozenset(out)


def degree(g: Graph, v: int) -> int:
    return len(neighbors(g, v))


def common_neighbors(g: Graph, u: int, v: int) -> VertexSet:
    return neighbors(g, u) & neighbors(g, v)


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as vertex sets, ordered by smallest member."""
    adj = _adjacency_sets(g)
    unseen = set(range(g.n))
    comps: list[VertexSet] = []
    while unseen:
        start = min(unseen)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        unseen -= seen
        comps.append(frozenset(seen))
    return comps


def diameter(g: Graph) -> int | float:
    """Longest shortest-path length; math.inf when the graph is disconnected."""
    adj = _adjacency_sets(g)
    worst = 0
    for src in range(g.n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if len(dist) < g.n:
            return math.inf
        worst = max(worst, max(dist.values()))
    return worst


def is_complete(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    """True when every pair inside the given vertex set (default: all) is adjacent."""
    vs = sorted(set(range(g.n) if vertices is None else vertices))
    for v in vs:
        _check_vertex(g, v)
    return all((u, v) in g.edges for u, v in combinations(vs, 2))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and its incident edges; remaining vertices shift down to stay contiguous."""
    _check_vertex(g, v)
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    edges = [(shift(a), shift(b)) for a, b in g.edges if a != v and b != v]
    return new_graph(g.n - 1, edges)


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Remove the given edges; every one must be present."""
    doomed = set()
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if e not in g.edges:
            raise GraphError(f"edge {e} not present")
        doomed.add(e)
    return Graph(g.n, g.edges - doomed)


# ---------------------------------------------------------------------------
# Canonical forms
#
# A labeled graph is encoded as the upper triangle of its adjacency matrix
# read column by column -- pair order (0,1), (0,2), (1,2), (0,3), ... -- with
# the first pair as the most significant bit.  The canonical key is the
# minimum of this integer over all n! relabelings.  Two properties matter:
# the bit order agrees with the graph6 wire format, and the first C(n-1,2)
# bits of an n-vertex encoding are exactly the encoding of the subgraph on
# vertices 0..n-2, which keeps canonical forms hereditary under deleting the
# last vertex (the enumeration module leans on this).
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Isomorphism class identifier: vertex count plus minimal encoding bits."""

    n: int
    bits: int


def encode_bits(g: Graph) -> int:
    """Upper-triangle encoding of the graph's current labeling."""
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | ((i, j) in g.edges)
    return bits


def graph_from_bits(n: int, bits: int) -> Graph:
    """Inverse of encode_bits."""
    npairs = n * (n - 1) // 2
    if bits < 0 or bits >= 1 << max(npairs, 1):
        raise GraphError(f"encoding {bits} out of range for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (bits >> (npairs - 1 - k)) & 1:
                edges.append((i, j))
            k += 1
    return new_graph(n, edges)


def canonical_key(g: Graph, *, max_n: int = DEFAULT_SIZE_CAP) -> CanonicalKey:
    """Minimal encoding over all relabelings; the total order on keys is (n, bits)."""
    if g.n > max_n:
        raise SizeCapError(
            f"canonicalization capped at {max_n} vertices, graph has {g.n}"
        )
    return CanonicalKey(g.n, _minimize_bits(g, encode_bits(g)))


def canonical_form(g: Graph, *, max_n: int = DEFAULT_SIZE_CAP) -> Graph:
    """A canonically relabeled copy of g."""
    key = canonical_key(g, max_n=max_n)
    return graph_from_bits(key.n, key.bits)


def is_canonically_labeled(g: Graph, *, max_n: int = DEFAULT_SIZE_CAP) -> bool:
    """True when g's own labeling already achieves the canonical encoding."""
    if g.n > max_n:
        raise SizeCapError(
            f"canonicalization capped at {max_n} vertices, graph has {g.n}"
        )
    own = encode_bits(g)
    return _minimize_bits(g, own, stop_below=True) == own


def are_isomorphic(g1: Graph, g2: Graph, *, max_n: int = DEFAULT_SIZE_CAP) -> bool:
    if g1.n != g2.n:
        return False
    return canonical_key(g1, max_n=max_n) == canonical_key(g2, max_n=max_n)


def _minimize_bits(g: Graph, start: int, stop_below: bool = False) -> int:
    """Branch-and-bound search for the minimal encoding.

    Vertices are placed one position at a time; placing position j fixes the
    column of bits (0,j)..(j-1,j), so a partial assignment pins a prefix of
    the encoding and any branch whose prefix exceeds the best known full
    encoding dies immediately.  With stop_below the search returns as soon as
    any full relabeling beats `start`, which is all a canonicity test needs.
    """
    n = g.n
    if n == 1:
        return 0
    npairs = n * (n - 1) // 2
    adj = [0] * n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    best = start
    placed = [0] * n

    def twins(u: int, v: int) -> bool:
        # Swapping twins is an automorphism that fixes every other vertex, so
        # branches through u and v are identical; without this, symmetric
        # graphs (edgeless, complete, clique unions) explode into n! ties.
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    def extend(depth: int, used: int, partial: int, pairs_done: int) -> bool:
        nonlocal best
        # Order candidates by the column bits they would produce, cheapest first.
        options = []
        for v in range(n):
            if used >> v & 1:
                continue
            av = adj[v]
            chunk = 0
            for i in range(depth):
                chunk = (chunk << 1) | (av >> placed[i] & 1)
            options.append((chunk, v))
        options.sort()
        pairs_next = pairs_done + depth
        shift = npairs - pairs_next
        tried: list[int] = []
        for chunk, v in options:
            cand = (partial << depth) | chunk
            if cand > best >> shift:
                break  # options are sorted, the rest are no better
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            placed[depth] = v
            if depth == n - 1:
                if cand < best:
                    best = cand
                    if stop_below:
                        return True
            else:
                if extend(depth + 1, used | (1 << v), cand, pairs_next):
                    return True
        return False

    extend(0, 0, 0, 0)
    return best


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

EDGE_LIST_FORMAT = "edge-list"
GRAPH6_FORMAT = "graph6"


def parse_graph(text: str, fmt: str = EDGE_LIST_FORMAT) -> Graph:
    if fmt == EDGE_LIST_FORMAT:
        return parse_edge_list(text)
    if fmt == GRAPH6_FORMAT:
        return parse_graph6(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = EDGE_LIST_FORMAT) -> str:
    if fmt == EDGE_LIST_FORMAT:
        return format_edge_list(g)
    if fmt == GRAPH6_FORMAT:
        return format_graph6(g)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def parse_edge_list(text: str) -> Graph:
    """Parse "n; u-v, u-v, ..." (the edge part may be empty)."""
    head, sep, tail = text.partition(";")
    if not sep:
        raise GraphFormatError("missing ';' between vertex count and edges")
    try:
        n = int(head.strip())
    except ValueError:
        raise GraphFormatError(f"vertex count {head.strip()!r} is not an integer") from None
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}")
    edges = []
    tail = tail.strip()
    if tail:
        for pos, token in enumerate(tail.split(","), start=1):
            token = token.strip()
            left, sep, right = token.partition("-")
            if not sep:
                raise GraphFormatError(f"edge {pos} ({token!r}): expected 'u-v'")
            try:
                u, v = int(left.strip()), int(right.strip())
            except ValueError:
                raise GraphFormatError(
                    f"edge {pos} ({token!r}): endpoints must be integers"
                ) from None
            if u == v:
                raise GraphFormatError(f"edge {pos} ({token!r}): self-loop")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(
                    f"edge {pos} ({token!r}): endpoint out of range for n={n}"
                )
            edges.append((u, v))
    return new_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    if not g.edges:
        return f"{g.n};"
    body = ", ".join(f"{u}-{v}" for u, v in sorted(g.edges))
    return f"{g.n}; {body}"


def parse_graph6(text: str) -> Graph:
    """Decode the standard graph6 format (sizes 1..62 supported)."""
    data = text.strip()
    if not data:
        raise GraphFormatError("empty graph6 string")
    raw = data.encode("ascii", errors="replace")
    if raw[0] == 0x7E:  # '~' introduces the multi-byte size form
        raise GraphFormatError("graph6 size beyond 62 vertices is not supported")
    n = raw[0] - 63
    if not (1 <= n <= 62):
        raise GraphFormatError(f"graph6 header byte {data[0]!r} gives unsupported size {n}")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    body = raw[1:]
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}"
        )
    bits = 0
    for byte in body:
        if not (63 <= byte <= 126):
            raise GraphFormatError(f"graph6 byte {byte} outside printable range")
        bits = (bits << 6) | (byte - 63)
    pad = expected * 6 - npairs
    if pad and bits & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits must be zero")
    return graph_from_bits(n, bits >> pad)


def format_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphFormatError("graph6 size beyond 62 vertices is not supported")
    npairs = g.n * (g.n - 1) // 2
    nbytes = (npairs + 5) // 6
    bits = encode_bits(g) << (nbytes * 6 - npairs)
    chars = [chr(g.n + 63)]
    for k in range(nbytes - 1, -1, -1):
        chars.append(chr(((bits >> (6 * k)) & 0x3F) + 63))
    return "".join(chars)


def _adjacency_sets(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range for n={g.n}")
