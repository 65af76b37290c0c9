"""The every-three-vertices-span-an-edge condition."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

import helpers
from cdgraph import all_graphs, new_graph, palfy_witness, satisfies_palfy

K13 = new_graph(4, [(0, 1), (0, 2), (0, 3)])


def test_star_witness_is_the_leaf_triple():
    assert palfy_witness(K13) == (1, 2, 3)


def test_witness_is_lexicographically_first():
    g = new_graph(5, [])
    assert palfy_witness(g) == (0, 1, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_fewer_than_three_vertices_is_vacuous(n):
    assert satisfies_palfy(new_graph(n))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_complete_graphs_satisfy(n):
    g = new_graph(n, combinations(range(n), 2))
    assert palfy_witness(g) is None


def test_triangle_free_path_fails():
    assert not satisfies_palfy(new_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))


def test_two_cliques_satisfy():
    g = new_graph(5, [(0, 1), (2, 3), (2, 4), (3, 4)])
    assert satisfies_palfy(g)


def test_satisfying_class_counts():
    expected = {1: 1, 2: 2, 3: 3, 4: 7, 5: 14, 6: 38}
    for n, count in expected.items():
        assert sum(1 for g in all_graphs(n) if satisfies_palfy(g)) == count


@given(helpers.graphs(min_n=3, max_n=7))
def test_witness_agrees_with_brute_force(g):
    """The witness, when present, really spans no edge; when absent, every
    triple spans one."""
    w = palfy_witness(g)
    bad = [
        t
        for t in combinations(range(g.n), 3)
        if not any((a, b) in g.edges for a, b in combinations(t, 2))
    ]
    if bad:
        assert w == bad[0]
    else:
        assert w is None


@given(helpers.graphs_with_permutation(max_n=6))
def test_condition_is_isomorphism_invariant(pair):
    g, perm = pair
    assert satisfies_palfy(g) == satisfies_palfy(helpers.relabel(g, perm))
