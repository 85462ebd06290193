"""BFS orderings and classical, (s,s') and (s,s')* dismantling checks.

Orderings are v_1..v_n with v_n the BFS base. Failing positions are reported
1-based, as k in v_k.
"""
import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .distances import UNREACHED, bfs_distances, distance_matrix
from .exceptions import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple
    base: int

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ParameterError("ordering is not a permutation of 0..{}".format(len(self.order) - 1))

    def __len__(self):
        return len(self.order)

    def positions(self):
        """ pos[v] is the 0-based index of v in the ordering """
        pos = np.empty(len(self.order), dtype=np.int64)
        pos[list(self.order)] = np.arange(len(self.order))
        return pos


def bfs_ordering(graph, u):
    """ Reverse of the FIFO BFS visit order from u, neighbors expanded in ascending id """
    visit = [u] + [y for _, y in nx.bfs_edges(graph.to_networkx(), u, sort_neighbors=sorted)]
    return VertexOrdering(tuple(reversed(visit)), u)


def is_bfs_ordering(graph, d, ordering):
    """ v_n is the base and d(base, v_k) never increases along the ordering """
    order = ordering.order
    if len(order) != graph.n or order[-1] != ordering.base:
        return False
    dist = d.d[ordering.base][list(order)]
    return bool((np.diff(dist) <= 0).all())


def _closed_adjacency(graph):
    C = np.eye(graph.n, dtype=bool)
    for u, v in graph.edges():
        C[u, v] = C[v, u] = True
    return C


def _dominated_at(C, order, pos, k):
    v = order[k]
    need = C[v] & (pos >= k)
    later = np.array(order[k + 1:], dtype=np.int64)
    escapes = need[None, :] & ~C[later]
    return bool((~escapes.any(axis=1)).any())


def is_dismantling_ordering(graph, ordering):
    """Classical check: every v_k (k < n) has a later v_l with N[v_k] cut to V_k inside N[v_l].

    Returns (ok, first failing k or None).
    """
    C = _closed_adjacency(graph)
    order = ordering.order
    pos = ordering.positions()
    for k in range(len(order) - 1):
        if not _dominated_at(C, order, pos, k):
            return False, k + 1
    return True, None


def greedy_dismantle(graph):
    """Remove the smallest-id dominated vertex until one vertex is left or none is dominated.

    Returns (True, VertexOrdering) when the graph is dismantlable, otherwise
    (False, sorted stuck kernel).
    """
    C = _closed_adjacency(graph)
    alive = np.ones(graph.n, dtype=bool)
    removed = []
    while alive.sum() > 1:
        chosen = None
        for v in np.flatnonzero(alive):
            need = C[v] & alive
            others = np.flatnonzero(alive)
            others = others[others != v]
            if (~(need[None, :] & ~C[others]).any(axis=1)).any():
                chosen = int(v)
                break
        if chosen is None:
            kernel = tuple(int(v) for v in np.flatnonzero(alive))
            logger.debug("dismantling stuck on %d vertices", len(kernel))
            return False, kernel
        alive[chosen] = False
        removed.append(chosen)
    last = int(np.flatnonzero(alive)[0])
    return True, VertexOrdering(tuple(removed) + (last,), last)


def is_ss_dismantling_ordering(graph, ordering, s, s_prime, star, d=None):
    """(s,s')-dismantling check, or the (s,s')* variant when star is true.

    Parameters:
    -----------
    s, s_prime: int
        Disk radii, both at least 1.
    star: bool
        When true both disks are taken in G. Otherwise D(v_k, s) is taken in
        G - v_l, recomputed by a BFS that avoids v_l.

    Returns (ok, first failing k or None).
    """
    if s < 1 or s_prime < 1:
        raise ParameterError("dismantling radii must be >= 1, got s={}, s'={}".format(s, s_prime))
    if d is None:
        d = distance_matrix(graph)
    A = d.d
    order = ordering.order
    pos = ordering.positions()
    for k in range(len(order) - 1):
        v = order[k]
        suffix = pos >= k
        found = False
        for l in order[k + 1:]:
            if star:
                own = A[v] <= s
            else:
                dist = np.array(bfs_distances(graph, v, removed=l))
                own = (dist != UNREACHED) & (dist <= s)
            if not (own & suffix & ~(A[l] <= s_prime)).any():
                found = True
                break
        if not found:
            return False, k + 1
    return True, None


def dismantling_report(ordering, ok, fail_k, scheme="classic", s=1, s_prime=1):
    return {
        "ordering": list(ordering.order),
        "dismantling": ok,
        "fail_k": fail_k,
        "scheme": scheme,
        "s": s,
        "s_prime": s_prime,
    }
