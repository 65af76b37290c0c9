"""Vertex admissibility probes and the three-valued fold."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import helpers
from cdgraph import (
    Fact,
    GraphError,
    KnowledgeBase,
    Status,
    VerdictValue,
    family_graph,
    incident_edge_subgraphs,
    is_admissible,
    is_strongly_admissible,
    neighbor_edge_subgraphs,
    new_graph,
)
from cdgraph.graphs import canonical_key, format_graph6

K4 = new_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C5 = family_graph(5, False)


def kb_of(pairs):
    facts = {}
    for g, status in pairs:
        key = canonical_key(g)
        facts[key] = Fact(key=key, status=status, source="synthetic")
    return KnowledgeBase(facts=facts)


# every probe of K4 at vertex 0, by shape
K4_MINUS_EDGE = new_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
PAW = new_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
TRIANGLE_PLUS_ISOLATED = new_graph(4, [(1, 2), (1, 3), (2, 3)])
TRIANGLE = new_graph(3, [(0, 1), (0, 2), (1, 2)])
P3 = new_graph(3, [(0, 1), (1, 2)])
EDGE_PLUS_ISOLATED = new_graph(3, [(0, 1)])

PLAIN_K4_FACTS = [
    (TRIANGLE, Status.DOES_NOT_OCCUR),
    (K4_MINUS_EDGE, Status.DOES_NOT_OCCUR),
    (PAW, Status.DOES_NOT_OCCUR),
    (TRIANGLE_PLUS_ISOLATED, Status.DOES_NOT_OCCUR),
]
STRONG_K4_FACTS = PLAIN_K4_FACTS + [
    (P3, Status.DOES_NOT_OCCUR),
    (EDGE_PLUS_ISOLATED, Status.DOES_NOT_OCCUR),
]


class TestProbes:
    def test_incident_probe_count_and_size(self):
        probes = incident_edge_subgraphs(K4, 0)
        assert len(probes) == 7  # 2^3 - 1 subsets
        assert all(p.n == 4 for p in probes)

    def test_neighbor_probe_count_and_size(self):
        probes = neighbor_edge_subgraphs(K4, 0)
        assert len(probes) == 7  # triangle among the neighbors
        assert all(p.n == 3 for p in probes)

    def test_no_neighbor_edges_means_no_strong_extras(self):
        assert neighbor_edge_subgraphs(C5, 4) == []

    def test_single_vertex_rejected(self):
        with pytest.raises(GraphError, match="two vertices"):
            is_admissible(new_graph(1), 0, KnowledgeBase.empty())

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            is_admissible(K4, 7, KnowledgeBase.empty())


class TestFold:
    def test_all_probes_excluded_gives_yes(self):
        verdict = is_admissible(K4, 0, kb_of(PLAIN_K4_FACTS))
        assert verdict.value is VerdictValue.YES
        assert verdict.blocking is None

    def test_occurring_probe_gives_no_and_beats_unknowns(self):
        # the vertex-deletion probe (a triangle) stays unknown here, but the
        # later occurs hit must still win the fold
        kb = kb_of([(K4_MINUS_EDGE, Status.OCCURS)])
        verdict = is_admissible(K4, 0, kb)
        assert verdict.value is VerdictValue.NO
        probe, classification = verdict.blocking
        assert classification.status is Status.OCCURS
        assert canonical_key(probe) == canonical_key(K4_MINUS_EDGE)

    def test_unclassified_probe_gives_unknown_with_witness(self, empty_kb):
        verdict = is_admissible(K4, 0, empty_kb)
        assert verdict.value is VerdictValue.UNKNOWN
        probe, classification = verdict.blocking
        assert classification.status is Status.UNKNOWN
        assert probe == TRIANGLE  # first probe is the vertex deletion

    def test_deterministic_witness(self, empty_kb):
        a = is_strongly_admissible(C5, 4, empty_kb)
        b = is_strongly_admissible(C5, 4, empty_kb)
        assert a == b
        assert format_graph6(a.blocking[0]) == "Cq"  # the path left by deleting 4


class TestStrongVersusPlain:
    def test_strong_adds_neighbor_probes(self):
        kb = kb_of(PLAIN_K4_FACTS)
        assert is_admissible(K4, 0, kb).value is VerdictValue.YES
        strong = is_strongly_admissible(K4, 0, kb)
        assert strong.value is VerdictValue.UNKNOWN
        probe, _ = strong.blocking
        assert canonical_key(probe) == canonical_key(P3)

    def test_strong_yes_once_neighbor_probes_covered(self):
        verdict = is_strongly_admissible(K4, 0, kb_of(STRONG_K4_FACTS))
        assert verdict.value is VerdictValue.YES


class TestFamilyVertices:
    def test_five_cycle_vertex_strongly_admissible_with_seed(self, seed_kb):
        assert is_strongly_admissible(C5, 4, seed_kb).value is VerdictValue.YES

    def test_five_cycle_vertex_unknown_without_seed(self, empty_kb):
        assert is_strongly_admissible(C5, 4, empty_kb).value is VerdictValue.UNKNOWN

    def test_degree_two_pair_of_bridge_member_not_settled(self, seed_kb):
        g = family_graph(5, True)
        assert is_strongly_admissible(g, 0, seed_kb).value is VerdictValue.UNKNOWN
        assert is_strongly_admissible(g, 1, seed_kb).value is VerdictValue.UNKNOWN


@given(helpers.graphs_with_permutation(min_n=2, max_n=5), st.data())
def test_verdict_value_is_isomorphism_invariant(seed_kb, pair, data):
    """Witness probes may differ across labelings, the verdict value may not."""
    g, perm = pair
    v = data.draw(st.integers(0, g.n - 1))
    original = is_admissible(g, v, seed_kb)
    relabeled = is_admissible(helpers.relabel(g, perm), perm[v], seed_kb)
    assert original.value is relabeled.value
