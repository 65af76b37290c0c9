"""Exhaustive enumeration of isomorphism classes, and batch classification.

Representatives are canonically labeled and stream in increasing canonical-key
order, so runs are reproducible byte for byte.  Two generation strategies:

* n <= 6: walk all 2^C(n,2) labeled encodings in increasing order; the first
  encoding of each orbit is its canonical form, and marking the whole orbit as
  seen makes the walk linear in the mask space.
* n >= 7: orderly generation.  Canonical encodings are hereditary under
  deleting the highest vertex (the encoding's most significant bits are the
  subgraph on the first n-1 vertices), so every canonical n-vertex encoding
  extends a canonical (n-1)-vertex one by a final adjacency column; extending
  every representative by every column and keeping the candidates that are
  their own canonical form yields each class exactly once.

The default cap is 7; n = 8 works when the cap is raised explicitly but takes
minutes, and nothing beyond 8 is supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import TYPE_CHECKING, Iterator

from .classifier import Status, classify
from .errors import SizeCapError
from .family import is_in_family
from .graphs import (
    CanonicalKey,
    Graph,
    encode_bits,
    format_graph6,
    graph_from_bits,
    is_canonically_labeled,
)
from .palfy import satisfies_palfy

if TYPE_CHECKING:
    from .kb import KnowledgeBase

DEFAULT_ENUM_CAP = 7
HARD_ENUM_LIMIT = 8
_ORBIT_MARKING_LIMIT = 6


def all_graphs(n: int, *, max_n: int = DEFAULT_ENUM_CAP) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class, minimal key first."""
    if n < 1:
        raise SizeCapError(f"enumeration needs n >= 1, got {n}")
    if n > min(max_n, HARD_ENUM_LIMIT):
        raise SizeCapError(
            f"enumeration capped at n = {min(max_n, HARD_ENUM_LIMIT)}, got n = {n}"
        )
    for bits in _class_bits(n):
        yield graph_from_bits(n, bits)


@lru_cache(maxsize=None)
def _class_bits(n: int) -> tuple[int, ...]:
    if n <= _ORBIT_MARKING_LIMIT:
        return _orbit_marking(n)
    return _orderly_extension(n)


def _orbit_marking(n: int) -> tuple[int, ...]:
    npairs = n * (n - 1) // 2
    # bit position of pair k in the encoding (pair 0 is most significant)
    pairpos: dict[tuple[int, int], int] = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            pairpos[(i, j)] = npairs - 1 - k
            k += 1
    maps = []
    for perm in permutations(range(n)):
        mp = [0] * max(npairs, 1)
        for (i, j), src in pairpos.items():
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            mp[src] = pairpos[(a, b)]
        maps.append(mp)
    seen = bytearray(1 << npairs)
    reps = []
    for mask in range(1 << npairs):
        if seen[mask]:
            continue
        reps.append(mask)  # first unseen in increasing order = orbit minimum
        for mp in maps:
            t = 0
            mm = mask
            while mm:
                low = mm & -mm
                t |= 1 << mp[low.bit_length() - 1]
                mm ^= low
            seen[t] = 1
    return tuple(reps)


def _orderly_extension(n: int) -> tuple[int, ...]:
    col_bits = n - 1
    reps = []
    for parent in _class_bits(n - 1):
        base = parent << col_bits
        for col in range(1 << col_bits):
            cand = base | col
            if is_canonically_labeled(graph_from_bits(n, cand), max_n=n):
                reps.append(cand)
    return tuple(reps)  # parent-major, column-minor order is globally increasing


@dataclass(frozen=True)
class EnumerationReport:
    """Batch classification summary for one vertex count."""

    n: int
    total_classes: int
    palfy_count: int
    verdict_histogram: dict[Status, int]
    family_members: tuple[CanonicalKey, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "total_classes": self.total_classes,
            "palfy_count": self.palfy_count,
            "verdict_histogram": {
                status.value: self.verdict_histogram.get(status, 0) for status in Status
            },
            "family_members": [
                format_graph6(graph_from_bits(key.n, key.bits))
                for key in self.family_members
            ],
        }


def enumerate_classify(
    n: int,
    kb: "KnowledgeBase",
    palfy_only: bool = False,
    *,
    max_n: int = DEFAULT_ENUM_CAP,
) -> EnumerationReport:
    """Classify every class at size n; with palfy_only, skip graphs failing the
    triple condition (the histogram then sums to palfy_count)."""
    total = 0
    palfy_count = 0
    histogram = {status: 0 for status in Status}
    members: list[CanonicalKey] = []
    for g in all_graphs(n, max_n=max_n):
        total += 1
        passes = satisfies_palfy(g)
        if passes:
            palfy_count += 1
        if is_in_family(g) is not None:
            # representatives from all_graphs are already canonically labeled
            members.append(CanonicalKey(g.n, encode_bits(g)))
        if palfy_only and not passes:
            continue
        verdict = classify(g, kb)
        histogram[verdict.status] += 1
    return EnumerationReport(
        n=n,
        total_classes=total,
        palfy_count=palfy_count,
        verdict_histogram=histogram,
        family_members=tuple(members),
    )
