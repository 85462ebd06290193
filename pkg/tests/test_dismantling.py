from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from alphametric.dismantling import (VertexOrdering, bfs_ordering, dismantling_report, greedy_dismantle,
                                     is_bfs_ordering, is_dismantling_ordering, is_ss_dismantling_ordering)
from alphametric.exceptions import ParameterError
from alphametric.generators import complete, cycle, path, random_tree, star, triangular_grid
from alphametric.graph import Graph
from alphametric.invariants import alpha_index
from alphametric.transforms import power

from .strategies import PROPERTY_SETTINGS, connected_graphs, dist, seeded_graphs


def some_ordering_dismantles(graph):
    return any(is_dismantling_ordering(graph, VertexOrdering(order, order[-1]))[0]
               for order in permutations(range(graph.n)))


def test_bfs_orderings():
    assert bfs_ordering(path(3), 0).order == (2, 1, 0)
    assert bfs_ordering(star(4), 0).order == (3, 2, 1, 0)
    assert bfs_ordering(cycle(4), 0).order == (2, 3, 1, 0)
    assert bfs_ordering(path(3), 1).base == 1


def test_is_bfs_ordering():
    d = dist(path(3))
    assert is_bfs_ordering(path(3), d, VertexOrdering((2, 1, 0), 0))
    assert not is_bfs_ordering(path(3), d, VertexOrdering((1, 2, 0), 0))
    assert not is_bfs_ordering(path(3), d, VertexOrdering((2, 0, 1), 0))
    k5 = complete(5)
    assert all(is_bfs_ordering(k5, dist(k5), VertexOrdering(order, order[-1]))
               for order in permutations(range(5)))


def test_ordering_must_be_a_permutation():
    with pytest.raises(ParameterError):
        VertexOrdering((0, 0, 1), 1)


def test_classical_dismantling():
    assert is_dismantling_ordering(path(4), VertexOrdering((3, 2, 1, 0), 0)) == (True, None)
    assert is_dismantling_ordering(star(5), VertexOrdering((1, 2, 3, 4, 0), 0)) == (True, None)
    for order in permutations(range(4)):
        assert is_dismantling_ordering(cycle(4), VertexOrdering(order, order[-1])) == (False, 1)


def test_greedy():
    ok, ordering = greedy_dismantle(random_tree(9, seed=1))
    assert ok and is_dismantling_ordering(random_tree(9, seed=1), ordering)[0]
    assert greedy_dismantle(cycle(4)) == (False, (0, 1, 2, 3))
    assert greedy_dismantle(cycle(5))[0] is False
    assert greedy_dismantle(complete(1)) == (True, VertexOrdering((0,), 0))


def connected_atlas(max_vertices):
    """ Every connected graph up to max_vertices vertices, one per isomorphism class """
    return [Graph.from_networkx(h) for h in nx.graph_atlas_g()
            if 0 < h.number_of_nodes() <= max_vertices and nx.is_connected(h)]


@pytest.mark.parametrize("graph", connected_atlas(6), ids=repr)
def test_greedy_agrees_with_exhaustive_search(graph):
    ok, result = greedy_dismantle(graph)
    assert ok == some_ordering_dismantles(graph)
    if ok:
        assert is_dismantling_ordering(graph, result)[0]


def test_bfs_orderings_dismantle_the_power():
    for graph in [cycle(4), cycle(5), cycle(6), triangular_grid(4)]:
        d = dist(graph)
        index = alpha_index(graph, d)[0]
        powered = power(graph, index + 1, d)
        for u in range(graph.n):
            assert is_dismantling_ordering(powered, bfs_ordering(graph, u))[0]


def test_ss_star_with_unit_radii_is_classical():
    for _, graph in seeded_graphs(30, max_vertices=7):
        for u in range(graph.n):
            ordering = bfs_ordering(graph, u)
            assert (is_ss_dismantling_ordering(graph, ordering, 1, 1, star=True)
                    == is_dismantling_ordering(graph, ordering))


@PROPERTY_SETTINGS
@given(connected_graphs(max_vertices=7), st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=3))
def test_star_pass_implies_plain_pass(graph, s, s_prime):
    d = dist(graph)
    for u in range(graph.n):
        ordering = bfs_ordering(graph, u)
        if is_ss_dismantling_ordering(graph, ordering, s, s_prime, True, d)[0]:
            assert is_ss_dismantling_ordering(graph, ordering, s, s_prime, False, d) == (True, None)


def test_ss_variants():
    c4 = cycle(4)
    ordering = bfs_ordering(c4, 0)
    assert is_ss_dismantling_ordering(c4, ordering, 2, 2, star=True) == (True, None)
    assert is_ss_dismantling_ordering(c4, ordering, 1, 1, star=True) == (False, 1)
    assert is_ss_dismantling_ordering(path(3), VertexOrdering((2, 1, 0), 0), 1, 1, star=False) == (True, None)
    with pytest.raises(ParameterError):
        is_ss_dismantling_ordering(c4, ordering, 0, 1, star=True)


def test_report():
    report = dismantling_report(VertexOrdering((1, 0), 0), False, 1, "ss*", 2, 3)
    assert report == {"ordering": [1, 0], "dismantling": False, "fail_k": 1,
                      "scheme": "ss*", "s": 2, "s_prime": 3}
