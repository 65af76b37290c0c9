"""Isomorphism-class enumeration and batch classification reports."""

from __future__ import annotations

import pytest

import helpers
from cdgraph import (
    SizeCapError,
    Status,
    all_graphs,
    are_isomorphic,
    enumerate_classify,
    family_graph,
)
from cdgraph.graphs import encode_bits, is_canonically_labeled, parse_graph6

CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@pytest.mark.parametrize("n,expected", sorted(CLASS_COUNTS.items()))
def test_class_counts(n, expected):
    assert sum(1 for _ in all_graphs(n)) == expected


def test_class_count_n8_with_raised_cap():
    assert sum(1 for _ in all_graphs(8, max_n=8)) == 12346


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_mask_dedup_oracle(n):
    assert CLASS_COUNTS[n] == len(helpers.orbit_min_classes(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_representatives_are_canonical_and_strictly_ordered(n):
    bits = [encode_bits(g) for g in all_graphs(n)]
    assert bits == sorted(set(bits))
    for g in all_graphs(n):
        assert is_canonically_labeled(g)


def test_representatives_biject_with_oracle_classes():
    reps = list(all_graphs(4))
    oracle = [helpers.graph_from_mask_lsb(4, m) for m in helpers.orbit_min_classes(4)]
    assert len(reps) == len(oracle)
    for g in oracle:
        assert sum(1 for r in reps if are_isomorphic(r, g)) == 1


class TestCaps:
    def test_nonpositive(self):
        with pytest.raises(SizeCapError, match="n >= 1"):
            list(all_graphs(0))

    def test_default_cap(self):
        with pytest.raises(SizeCapError, match="capped at n = 7"):
            list(all_graphs(8))

    def test_hard_limit_wins_over_raised_cap(self):
        with pytest.raises(SizeCapError, match="capped at n = 8"):
            list(all_graphs(9, max_n=12))


class TestReports:
    def test_empty_kb_summary_n5(self, empty_kb):
        report = enumerate_classify(5, empty_kb)
        assert report.total_classes == 34
        assert report.palfy_count == 14
        assert report.verdict_histogram == {
            Status.OCCURS: 0,
            Status.DOES_NOT_OCCUR: 22,
            Status.UNKNOWN: 12,
        }
        assert report.to_json_dict()["family_members"] == ["DLo", "DLs"]

    def test_empty_kb_summary_n6(self, empty_kb):
        report = enumerate_classify(6, empty_kb)
        assert report.total_classes == 156
        assert report.palfy_count == 38
        assert report.verdict_histogram == {
            Status.OCCURS: 0,
            Status.DOES_NOT_OCCUR: 120,
            Status.UNKNOWN: 36,
        }
        assert len(report.family_members) == 2

    def test_seed_kb_resolves_one_more_class_at_n5(self, seed_kb):
        report = enumerate_classify(5, seed_kb)
        assert report.verdict_histogram == {
            Status.OCCURS: 0,
            Status.DOES_NOT_OCCUR: 23,
            Status.UNKNOWN: 11,
        }

    def test_palfy_only_histogram_counts_only_passing_classes(self, empty_kb):
        report = enumerate_classify(5, empty_kb, palfy_only=True)
        assert report.total_classes == 34
        assert report.palfy_count == 14
        assert sum(report.verdict_histogram.values()) == 14
        assert report.verdict_histogram == {
            Status.OCCURS: 0,
            Status.DOES_NOT_OCCUR: 2,  # the two family members
            Status.UNKNOWN: 12,
        }

    def test_family_members_match_generator(self, empty_kb):
        report = enumerate_classify(5, empty_kb)
        found = [
            parse_graph6(g6) for g6 in report.to_json_dict()["family_members"]
        ]
        assert are_isomorphic(found[0], family_graph(5, False))
        assert are_isomorphic(found[1], family_graph(5, True))

    def test_json_dict_shape(self, empty_kb):
        d = enumerate_classify(4, empty_kb).to_json_dict()
        assert set(d) == {
            "n",
            "total_classes",
            "palfy_count",
            "verdict_histogram",
            "family_members",
        }
        assert set(d["verdict_histogram"]) == {"occurs", "not_occurs", "unknown"}
        assert d["n"] == 4
        assert d["family_members"] == []
