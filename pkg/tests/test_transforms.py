from itertools import product

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from alphametric.distances import eccentricities
from alphametric.exceptions import HullCapError, ParameterError
from alphametric.generators import complete, cycle, path, random_tree, star
from alphametric.invariants import hyperbolicity
from alphametric.transforms import extremal_functions, hull_report, injective_hull, is_helly, power, subdivide

from .strategies import PROPERTY_SETTINGS, connected_graphs, dist


def naive_extremal_functions(d):
    """ Every f with 0 <= f(v) <= ecc(v) that is feasible and has no slack anywhere """
    A = d.d.tolist()
    n = len(A)
    ecc, _, _ = eccentricities(d)
    found = []
    for f in product(*(range(e + 1) for e in ecc)):
        feasible = all(f[u] + f[v] >= A[u][v] for u in range(n) for v in range(n))
        tight = all(any(f[u] + f[v] == A[u][v] for v in range(n)) for u in range(n))
        if feasible and tight:
            found.append(f)
    return found


def test_subdivided_triangle_is_a_hexagon():
    sub, vertex_map = subdivide(complete(3))
    assert sub.n == 6 and sub.m == 6
    assert nx.is_isomorphic(sub.to_networkx(), cycle(6).to_networkx())
    assert vertex_map.edge_vertex == {(0, 1): 3, (0, 2): 4, (1, 2): 5}
    assert not vertex_map.is_edge_vertex(2) and vertex_map.is_edge_vertex(3)


@PROPERTY_SETTINGS
@given(connected_graphs(max_vertices=7))
def test_subdivision_doubles_distances(graph):
    sub, vertex_map = subdivide(graph)
    assert sub.n == graph.n + graph.m and sub.m == 2 * graph.m
    d, e = dist(graph).d, dist(sub).d
    originals = list(vertex_map.original)
    assert np.array_equal(e[np.ix_(originals, originals)], 2 * d)


def test_powers():
    assert power(path(5), 1) == path(5)
    squared = power(path(5), 2)
    assert dist(squared)(0, 4) == 2
    assert all(power(cycle(6), 2).degree(v) == 4 for v in range(6))
    assert power(cycle(6), 3) == complete(6)
    with pytest.raises(ParameterError):
        power(path(3), 0)


def test_hull_of_a_square_adds_a_center():
    hull = injective_hull(cycle(4))
    assert hull.size == 5
    assert (1, 1, 1, 1) in hull.functions
    center = hull.functions.index((1, 1, 1, 1))
    assert set(hull.hull.neighbors(center)) == set(hull.embedding)
    assert nx.is_isomorphic(hull.hull.to_networkx(), nx.wheel_graph(5))
    assert hull.embedding == (0, 1, 4, 3)


def test_hull_of_a_pentagon_is_a_wheel():
    hull = injective_hull(cycle(5))
    assert hull.size == 6
    assert nx.is_isomorphic(hull.hull.to_networkx(), nx.wheel_graph(6))
    assert hull.original_vertices() == set(range(6)) - {hull.functions.index((1,) * 5)}


@pytest.mark.parametrize("seed", range(8))
def test_hull_of_a_tree_is_the_tree(seed):
    tree = random_tree(2 + seed % 6, seed)
    hull = injective_hull(tree)
    assert hull.size == tree.n
    assert nx.is_isomorphic(hull.hull.to_networkx(), tree.to_networkx())


@PROPERTY_SETTINGS
@given(connected_graphs(max_vertices=6))
def test_extremal_functions_match_naive_enumeration(graph):
    d = dist(graph)
    assert extremal_functions(d) == naive_extremal_functions(d)


@PROPERTY_SETTINGS
@given(connected_graphs(max_vertices=6))
def test_hull_embeds_isometrically_and_keeps_hyperbolicity(graph):
    d = dist(graph)
    hull = injective_hull(graph, d=d)
    e = dist(hull.hull)
    emb = list(hull.embedding)
    assert np.array_equal(e.d[np.ix_(emb, emb)], d.d)
    assert is_helly(hull.hull, e)
    assert hyperbolicity(hull.hull, e)[0] == hyperbolicity(graph, d)[0]


def test_helly():
    assert is_helly(complete(5), dist(complete(5)))
    assert is_helly(star(5), dist(star(5)))
    assert not is_helly(cycle(4), dist(cycle(4)))
    assert not is_helly(cycle(10), dist(cycle(10)))
    assert is_helly(complete(12), dist(complete(12)))


def test_hull_cap():
    with pytest.raises(HullCapError) as info:
        injective_hull(cycle(4), cap=4)
    assert info.value.reached == 5
    with pytest.raises(ParameterError):
        injective_hull(cycle(4), cap=3)


def test_hull_report():
    hull = injective_hull(cycle(4))
    assert hull_report(hull) == {"original_to_hull": [0, 1, 4, 3], "hull_size": 5}
    assert hull_report(hull, dump_functions=True)["functions"][2] == [1, 1, 1, 1]
