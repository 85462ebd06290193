from itertools import combinations_with_replacement

import pytest
from hypothesis import given

from alphametric.exceptions import SizeCapError
from alphametric.generators import complete, cycle, g_p, g_p_vertex, path, random_chordal, star, triangular_grid
from alphametric.metric_triangles import (enumerate_metric_triangles, is_metric_triangle,
                                          max_metric_triangle_side, quasi_median, triangles_report)

from .strategies import PROPERTY_SETTINGS, connected_graphs, dist


def test_triangle():
    graph = complete(3)
    triangles, degenerate = enumerate_metric_triangles(graph, dist(graph))
    assert [(t.u, t.v, t.w, t.type) for t in triangles] == [(0, 1, 2, (1, 1, 1))]
    assert len(degenerate) == 3
    assert all(t.is_degenerate and t.max_side == 0 for t in degenerate)
    assert max_metric_triangle_side(graph, dist(graph)) == 1


@pytest.mark.parametrize("graph", [path(2), path(8), star(8)])
def test_trees_have_no_proper_triangle(graph):
    triangles, _ = enumerate_metric_triangles(graph, dist(graph))
    assert triangles == []
    assert max_metric_triangle_side(graph, dist(graph)) == 0


def test_four_cycle_has_no_triangle():
    # two adjacent corners share the vertex between them with the third
    assert enumerate_metric_triangles(cycle(4), dist(cycle(4)))[0] == []


@pytest.mark.parametrize("p", range(2, 5))
def test_g_p_long_triangle(p):
    graph = g_p(p)
    d = dist(graph)
    x0, y, z = g_p_vertex(p, "x", 0), g_p_vertex(p, "y", p - 1), g_p_vertex(p, "z", p - 1)
    assert is_metric_triangle(d, x0, y, z)
    triangles, _ = enumerate_metric_triangles(graph, d)
    found = {(t.u, t.v, t.w): t for t in triangles}
    assert found[(x0, y, z)].type == (p, 2, p)
    assert max_metric_triangle_side(graph, d) >= p
    assert quasi_median(graph, d, x0, y, z) == (x0, y, z)


def test_quasi_median_of_a_star_is_the_center():
    graph = star(5)
    assert quasi_median(graph, dist(graph), 1, 2, 3) == (0, 0, 0)


def test_quasi_median_of_a_path():
    graph = path(6)
    assert quasi_median(graph, dist(graph), 0, 2, 5) == (2, 2, 2)


def test_quasi_median_keeps_a_metric_triangle():
    graph = complete(3)
    assert quasi_median(graph, dist(graph), 0, 1, 2) == (0, 1, 2)


@PROPERTY_SETTINGS
@given(connected_graphs(max_vertices=7))
def test_every_triple_has_a_quasi_median(graph):
    d = dist(graph)
    for u, v, w in combinations_with_replacement(range(graph.n), 3):
        up, vp, wp = quasi_median(graph, d, u, v, w)
        assert is_metric_triangle(d, up, vp, wp)
        assert d(u, v) == d(u, up) + d(up, vp) + d(vp, v)


@PROPERTY_SETTINGS
@given(connected_graphs(min_vertices=3, max_vertices=7))
def test_enumeration_agrees_with_the_corner_test(graph):
    d = dist(graph)
    triangles, _ = enumerate_metric_triangles(graph, d, threads=2)
    found = {(t.u, t.v, t.w) for t in triangles}
    n = graph.n
    expected = {(u, v, w) for u in range(n) for v in range(u + 1, n) for w in range(v + 1, n)
                if is_metric_triangle(d, u, v, w)}
    assert found == expected


def test_alpha_one_graphs_have_short_triangles():
    graphs = [triangular_grid(5)] + [random_chordal(9, seed) for seed in range(10)]
    for graph in graphs:
        triangles, _ = enumerate_metric_triangles(graph, dist(graph))
        assert all(t.sorted_type in {(1, 1, 1), (1, 2, 2), (2, 2, 2)} for t in triangles)


def test_cap(tunables):
    tunables.triangle_cap = 3
    with pytest.raises(SizeCapError):
        enumerate_metric_triangles(complete(4), dist(complete(4)))


def test_report_truncates(tunables):
    tunables.report_truncate = 2
    graph = complete(4)
    report = triangles_report(graph, dist(graph))
    assert report["metric_triangle_count"] == 4
    assert len(report["metric_triangles"]) == 2
    assert report["metric_triangles_truncated"] == 2
    assert report["degenerate_metric_triangles"] == 4
    assert report["max_side"] == 1
