"""All-pairs BFS distances, intervals, slices, disks and eccentricities."""
import logging

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .exceptions import ParameterError, SizeCapError
from .globals import globals as g

logger = logging.getLogger(__name__)

UNREACHED = -1


class DistanceMatrix():
    """Exact hop distances of a connected graph, stored densely and read-only.

    Parameters:
    -----------
    matrix: array-like of shape (n, n)
        Nonnegative integer distances.
    """
    __slots__ = ("_d",)

    def __init__(self, matrix):
        d = np.array(matrix, dtype=np.int32, copy=True)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ParameterError("distance matrix must be square, got shape {}".format(d.shape))
        d.setflags(write=False)
        self._d = d

    @property
    def n(self):
        return self._d.shape[0]

    @property
    def d(self):
        """ The underlying read-only numpy array """
        return self._d

    def __getitem__(self, key):
        return self._d[key]

    def __call__(self, u, v):
        return int(self._d[u, v])

    def row(self, v):
        return self._d[v]

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self._d, other._d)

    def __repr__(self):
        return "DistanceMatrix(n={})".format(self.n)


def _hops(rows):
    """ Unweighted shortest_path output (float, inf when unreachable) as int32 with UNREACHED """
    return np.where(np.isinf(rows), UNREACHED, rows).astype(np.int32)


def bfs_distances(graph, source, removed=None):
    """Hop distances from source, UNREACHED for vertices that cannot be reached.

    removed, when given, is a vertex treated as deleted from the graph.
    """
    if source == removed:
        return [UNREACHED] * graph.n
    row = shortest_path(graph.to_csr(removed), directed=False, unweighted=True, indices=source)
    return [int(x) for x in _hops(row)]


def distance_matrix(graph):
    """ All-pairs hop distances by BFS from every vertex """
    n = graph.n
    if n > g.max_vertices:
        raise SizeCapError("dense distance matrix vertex count", g.max_vertices, n)
    matrix = _hops(shortest_path(graph.to_csr(), directed=False, unweighted=True))
    logger.debug("distance matrix for n=%d computed", n)
    return DistanceMatrix(matrix)


def interval_mask(d, u, v):
    """ Boolean mask of I(u, v) """
    return d[u] + d[v] == d[u, v]


def interval(d, u, v, open_interval=False):
    """I(u, v): vertices on some shortest (u, v)-path.

    With open_interval=True the endpoints are removed, giving I°(u, v).
    """
    members = frozenset(int(x) for x in np.flatnonzero(interval_mask(d, u, v)))
    if open_interval:
        return members - {u, v}
    return members


def slice_mask(d, u, v, k):
    if not 0 <= k <= d[u, v]:
        raise ParameterError("slice index {} outside 0..{}".format(k, int(d[u, v])))
    return interval_mask(d, u, v) & (d[u] == k)


def interval_slice(d, u, v, k):
    """ S_k(u, v): the vertices of I(u, v) at distance exactly k from u """
    return frozenset(int(x) for x in np.flatnonzero(slice_mask(d, u, v, k)))


def disk_mask(d, v, r):
    return d[v] <= r


def disk(d, v, r):
    """ D(v, r) """
    return frozenset(int(x) for x in np.flatnonzero(disk_mask(d, v, r)))


def eccentricities(d):
    """ (per-vertex eccentricities, diameter, radius) """
    ecc = d.d.max(axis=1)
    return tuple(int(e) for e in ecc), int(ecc.max()), int(ecc.min())


def diameter(d):
    return int(d.d.max())
