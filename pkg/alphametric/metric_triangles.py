"""Metric triangles and quasi-medians.

A triple u, v, w is a metric triangle when at every corner c, with a and b the
other two corners, I(c, a) and I(c, b) meet only in c. For three distinct
vertices this is pairwise disjointness of the open intervals with no corner
inside the opposite interval; the only degenerate metric triangles are (v, v, v).
"""
import logging
from dataclasses import dataclass

import numpy as np

from .distances import interval_mask
from .exceptions import InvariantViolation, SizeCapError
from .globals import globals as g
from .utils.parallel import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MetricTriangle:
    u: int
    v: int
    w: int
    type: tuple
    max_side: int

    @property
    def sorted_type(self):
        return tuple(sorted(self.type))

    @property
    def is_degenerate(self):
        return self.u == self.v or self.v == self.w or self.u == self.w


def _triangle(A, u, v, w):
    sides = (int(A[u, v]), int(A[v, w]), int(A[w, u]))
    return MetricTriangle(u, v, w, sides, max(sides))


def _corner_free(graph, A, u):
    """Boolean matrix F with F[a, b] true iff I(u, a) and I(u, b) meet only in u.

    They share a vertex besides u exactly when some neighbor of u lies on a
    shortest path toward both a and b.
    """
    nbrs = list(graph.neighbors(u))
    if not nbrs:
        return np.ones(A.shape, dtype=bool)
    toward = (A[nbrs] == A[u][None, :] - 1).astype(np.int32)
    return (toward.T @ toward) == 0


def _check_cap(n):
    if n > g.triangle_cap:
        raise SizeCapError("metric triangle enumeration vertex count", g.triangle_cap, n)


def enumerate_metric_triangles(graph, d, threads=None):
    """All metric triangles u < v < w, sorted, plus the degenerate ones (v, v, v).

    Returns (triangles, degenerate).
    """
    n = graph.n
    _check_cap(n)
    A = d.d
    free = np.stack(parallel_map(lambda u: _corner_free(graph, A, u), range(n), threads))

    def found_at(u):
        cond = free[u] & free[:, u, :] & free[:, u, :].T
        cond = np.triu(cond, k=1)
        cond[: u + 1, :] = False
        return [_triangle(A, u, int(v), int(w)) for v, w in np.argwhere(cond)]

    triangles = [t for block in parallel_map(found_at, range(n), threads) for t in block]
    degenerate = [_triangle(A, v, v, v) for v in range(n)]
    logger.debug("%d metric triangles, %d degenerate", len(triangles), len(degenerate))
    return triangles, degenerate


def max_metric_triangle_side(graph, d, threads=None):
    triangles, _ = enumerate_metric_triangles(graph, d, threads)
    return max((t.max_side for t in triangles), default=0)


def is_metric_triangle(d, u, v, w):
    for c, a, b in ((u, v, w), (v, w, u), (w, u, v)):
        common = np.flatnonzero(interval_mask(d, c, a) & interval_mask(d, c, b))
        if common.tolist() != [c]:
            return False
    return True


def _step(graph, A, corner, a, b):
    for y in graph.neighbors(corner):
        if A[y, a] == A[corner, a] - 1 and A[y, b] == A[corner, b] - 1:
            return y
    return None


def quasi_median(graph, d, u, v, w):
    """Quasi-median (u', v', w') of the triple (u, v, w) by hill descent.

    Each corner in turn walks to its smallest-id neighbor lying in both of its
    intervals toward the two other corners, until no corner can move.
    """
    A = d.d
    corners = [u, v, w]
    moved = True
    while moved:
        moved = False
        for i in range(3):
            a, b = corners[(i + 1) % 3], corners[(i + 2) % 3]
            nxt = _step(graph, A, corners[i], a, b)
            while nxt is not None:
                corners[i] = nxt
                moved = True
                nxt = _step(graph, A, nxt, a, b)
    up, vp, wp = corners
    ok = (A[u, v] == A[u, up] + A[up, vp] + A[vp, v]
          and A[v, w] == A[v, vp] + A[vp, wp] + A[wp, w]
          and A[w, u] == A[w, wp] + A[wp, up] + A[up, u])
    if not ok or not is_metric_triangle(d, up, vp, wp):
        raise InvariantViolation(
            "quasi-median descent of ({}, {}, {}) ended at non-median ({}, {}, {})".format(
                u, v, w, up, vp, wp))
    return up, vp, wp


def triangles_report(graph, d, threads=None):
    triangles, degenerate = enumerate_metric_triangles(graph, d, threads)
    limit = g.report_truncate
    shown = triangles[:limit]
    return {
        "metric_triangles": [{"vertices": [t.u, t.v, t.w], "type": list(t.type)} for t in shown],
        "metric_triangles_truncated": max(0, len(triangles) - len(shown)),
        "metric_triangle_count": len(triangles),
        "degenerate_metric_triangles": len(degenerate),
        "max_side": max((t.max_side for t in triangles), default=0),
    }
