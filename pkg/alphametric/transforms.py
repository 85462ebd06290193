"""Graph transforms: 1-subdivision, powers and the injective (Helly) hull."""
import logging
from dataclasses import dataclass

import numpy as np

from .distances import distance_matrix
from .exceptions import HullCapError, ParameterError
from .globals import globals as g
from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionMap:
    """Vertex bookkeeping of a 1-subdivision.

    original[v] is the id of original vertex v in the subdivision (the same
    id), edge_vertex[(u, v)] the id of the vertex placed on edge uv (u < v).
    """
    original: tuple
    edge_vertex: dict

    def is_edge_vertex(self, x):
        return x >= len(self.original)


def subdivide(graph):
    """ Sigma(G): every edge uv replaced by a path u - e - v; edge-vertices get ids n.. in edge order """
    n = graph.n
    edge_vertex = {}
    edges = []
    for offset, (u, v) in enumerate(graph.edges()):
        e = n + offset
        edge_vertex[(u, v)] = e
        edges.append((u, e))
        edges.append((v, e))
    return Graph(n + graph.m, edges), SubdivisionMap(tuple(range(n)), edge_vertex)


def power(graph, lam, d=None):
    """ G^lam: same vertices, uv adjacent iff 0 < d(u, v) <= lam """
    if lam < 1:
        raise ParameterError("graph power needs lambda >= 1, got {}".format(lam))
    if d is None:
        d = distance_matrix(graph)
    us, vs = np.nonzero(np.triu((d.d > 0) & (d.d <= lam), k=1))
    return Graph(graph.n, zip(us.tolist(), vs.tolist()))


@dataclass(frozen=True)
class HullGraph:
    """Injective hull realized on integer extremal functions.

    Parameters:
    -----------
    hull: Graph
        Vertices are the extremal functions in lexicographic order, adjacent
        when their sup-distance is exactly 1.
    functions: tuple of tuples
        functions[h] is the extremal function of hull vertex h.
    embedding: tuple
        embedding[v] is the hull vertex of the distance function d(v, .).
    """
    hull: Graph
    functions: tuple
    embedding: tuple

    @property
    def size(self):
        return self.hull.n

    def original_vertices(self):
        return set(self.embedding)


def _tight_reachable(A, ecc, f, k, lo):
    """Every assigned vertex u <= k can still have a partner v with f(u) + f(v) = d(u, v)."""
    F = np.array(f[: k + 1])
    tight = (F[:, None] + F[None, :] == A[: k + 1, : k + 1]).any(axis=1)
    if k + 1 < len(ecc):
        target = A[: k + 1, k + 1:] - F[:, None]
        tight |= ((target >= lo[k + 1:]) & (target <= ecc[k + 1:])).any(axis=1)
    return bool(tight.all())


def extremal_functions(d, cap=None):
    """All integer extremal functions of the metric d, in lexicographic order.

    Backtracks over vertices in id order with values ascending. A value is
    kept only if every later vertex still has a feasible range and every
    assigned vertex can still be made tight; the leaves are exactly the
    extremal functions.
    """
    cap = g.hull_cap if cap is None else cap
    A = d.d.astype(np.int64)
    n = A.shape[0]
    ecc = A.max(axis=1)
    f = [0] * n
    found = []

    def extend(k, lo):
        if k == n:
            found.append(tuple(f))
            if len(found) > cap:
                raise HullCapError(cap, len(found))
            return
        for value in range(int(lo[k]), int(ecc[k]) + 1):
            f[k] = value
            nxt = np.maximum(lo, A[k] - value)
            if (nxt[k + 1:] > ecc[k + 1:]).any():
                continue
            if not _tight_reachable(A, ecc, f, k, nxt):
                continue
            extend(k + 1, nxt)

    extend(0, np.zeros(n, dtype=np.int64))
    return sorted(set(found))


def injective_hull(graph, cap=None, d=None):
    """Injective hull H(G) with the isometric embedding of G.

    Raises HullCapError once more than cap extremal functions are found.
    """
    cap = g.hull_cap if cap is None else cap
    if cap < graph.n:
        raise ParameterError("hull cap {} is below the vertex count {}".format(cap, graph.n))
    if d is None:
        d = distance_matrix(graph)
    functions = extremal_functions(d, cap)
    F = np.array(functions, dtype=np.int64)
    edges = []
    for i in range(len(functions) - 1):
        gap = np.abs(F[i + 1:] - F[i]).max(axis=1)
        edges.extend((i, i + 1 + int(j)) for j in np.flatnonzero(gap == 1))
    index = {fn: h for h, fn in enumerate(functions)}
    embedding = tuple(index[tuple(int(x) for x in d.d[v])] for v in range(graph.n))
    logger.info("injective hull: %d vertices over %d originals", len(functions), graph.n)
    return HullGraph(Graph(len(functions), edges), tuple(functions), embedding)


def is_helly(graph, d):
    """True iff every extremal function is a distance function, i.e. the hull adds nothing.

    The search stops at the first extremal function beyond the n distance
    functions, so a non-Helly graph never enumerates its whole hull.
    """
    try:
        return len(extremal_functions(d, graph.n)) == graph.n
    except HullCapError:
        return False


def hull_report(hull, dump_functions=False):
    report = {"original_to_hull": list(hull.embedding), "hull_size": hull.size}
    if dump_functions:
        report["functions"] = [list(fn) for fn in hull.functions]
    return report
