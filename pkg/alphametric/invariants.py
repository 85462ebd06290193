"""Exact metric invariants, each returned with a deterministic extremal witness.

Every search keeps the lexicographically smallest witness among all maximizers,
so any partition of the outer loop over workers yields the same report.
"""
import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .distances import eccentricities, interval_mask
from .exceptions import ParameterError
from .half_integer import HalfInteger, ceil_half
from .utils.parallel import better, reduce_partitioned

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaWitness:
    """ v in I(u,w), w in I(v,x), vw an edge; defect = d(u,v)+1+d(w,x)-d(u,x) """
    u: int
    v: int
    w: int
    x: int
    defect: int

    def as_tuple(self):
        return (self.u, self.v, self.w, self.x)


@dataclass(frozen=True)
class FourPointWitness:
    u: int
    v: int
    w: int
    x: int
    sums: tuple
    delta: HalfInteger

    def as_tuple(self):
        return (self.u, self.v, self.w, self.x)


@dataclass(frozen=True)
class ThinnessWitness:
    u: int
    v: int
    k: int
    x: int
    y: int
    dist: int

    def as_tuple(self):
        return (self.u, self.v, self.k, self.x, self.y)


@dataclass(frozen=True)
class TriangleThinnessWitness:
    """ Apex y, k = floor((x|z)_y), z' in S_k(y,x), x' in S_k(y,z) """
    x: int
    y: int
    z: int
    k: int
    z_prime: int
    x_prime: int
    dist: int

    def as_tuple(self):
        return (self.x, self.y, self.z, self.k, self.z_prime, self.x_prime)


@dataclass(frozen=True)
class BowWitness:
    u: int
    v: int
    w: int
    x: int
    overlap: int
    defect: int

    def as_tuple(self):
        return (self.u, self.v, self.w, self.x)


def _matrix(d):
    return d.d if hasattr(d, "d") else np.asarray(d)


def four_point_sums(d, u, v, w, x):
    """ The pairing sums d(u,x)+d(v,w), d(u,w)+d(v,x), d(u,v)+d(w,x), sorted descending """
    A = _matrix(d)
    sums = [int(A[u, x] + A[v, w]), int(A[u, w] + A[v, x]), int(A[u, v] + A[w, x])]
    return tuple(sorted(sums, reverse=True))


def delta_of_quadruple(d, u, v, w, x):
    sums = four_point_sums(d, u, v, w, x)
    return HalfInteger(doubled=sums[0] - sums[1])


def gromov_product(d, x, y, z):
    """ (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2, exactly """
    A = _matrix(d)
    return HalfInteger(doubled=int(A[x, z] + A[y, z] - A[x, y]))


def _concatenation_kernel(A):
    """Defect of gluing a shortest (u,w)-path and a shortest (v,x)-path along [v,w].

    For every (v, w) in the batch, u ranges over vertices with v in I(u,w) and
    x over vertices with w in I(v,x); the defect is
    d(u,v) + d(v,w) + d(w,x) - d(u,x).
    """
    def kernel(pairs):
        best = None
        for v, w in pairs:
            dvw = A[v, w]
            us = np.flatnonzero(A[:, w] == A[:, v] + dvw)
            xs = np.flatnonzero(A[v, :] == dvw + A[w, :])
            block = A[us, v][:, None] + dvw + A[w, xs][None, :] - A[np.ix_(us, xs)]
            flat = int(np.argmax(block))
            ui, xi = divmod(flat, len(xs))
            candidate = (int(block[ui, xi]), (int(us[ui]), int(v), int(w), int(xs[xi])))
            if better(candidate, best):
                best = candidate
        return best
    return kernel


def alpha_index(graph, d, threads=None):
    """Smallest i such that the graph is alpha_i-metric, with its witness.

    Scans every oriented edge vw, then u with d(u,w) = d(u,v)+1 and x with
    d(v,x) = d(w,x)+1. Returns (0, None) when no configuration exists.
    """
    A = _matrix(d)
    oriented = sorted([(u, v) for u, v in graph.edges()] + [(v, u) for u, v in graph.edges()])
    best = reduce_partitioned(_concatenation_kernel(A), oriented, threads)
    if best is None:
        return 0, None
    value, (u, v, w, x) = best
    return max(0, value), AlphaWitness(u, v, w, x, value)


def bow_defect(graph, d, lam, threads=None):
    """Smallest mu such that the graph satisfies the (lam, mu)-bow metric.

    Quantifies over v in I(u,w), w in I(v,x) with d(v,w) > lam; lam is a
    HalfInteger (or anything HalfInteger.of accepts).
    """
    lam = HalfInteger.of(lam)
    if lam.doubled < 0:
        raise ParameterError("bow metric threshold must be nonnegative, got {}".format(lam))
    A = _matrix(d)
    vs, ws = np.nonzero(2 * A > lam.doubled)
    pairs = list(zip(vs.tolist(), ws.tolist()))
    best = reduce_partitioned(_concatenation_kernel(A), pairs, threads)
    if best is None:
        return 0, None
    value, (u, v, w, x) = best
    return value, BowWitness(u, v, w, x, int(A[v, w]), value)


def _four_point_kernel(A):
    n = A.shape[0]

    def kernel(pairs):
        best = None
        for u, v in pairs:
            duv = A[u, v]
            du = A[u, v:]
            dv = A[v, v:]
            s1 = duv + A[v:, v:]
            s2 = du[:, None] + dv[None, :]
            s3 = dv[:, None] + du[None, :]
            hi = np.maximum(np.maximum(s1, s2), s3)
            lo = np.minimum(np.minimum(s1, s2), s3)
            gap = hi - (s1 + s2 + s3 - hi - lo)
            flat = int(np.argmax(gap))
            wi, xi = divmod(flat, n - v)
            candidate = (int(gap[wi, xi]), (int(u), int(v), int(v + wi), int(v + xi)))
            if better(candidate, best):
                best = candidate
        return best
    return kernel


def hyperbolicity(graph, d, threads=None):
    """Gromov hyperbolicity by the four-point condition over all quadruples.

    Any permutation of a maximizer is a maximizer, so the lexicographically
    smallest one is sorted; it suffices to scan u <= v and w, x >= v.
    """
    A = _matrix(d)
    n = A.shape[0]
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    value, (u, v, w, x) = reduce_partitioned(_four_point_kernel(A), pairs, threads)
    sums = four_point_sums(A, u, v, w, x)
    witness = FourPointWitness(u, v, w, x, sums, HalfInteger(doubled=value))
    return HalfInteger(doubled=value), witness


def _thinness_kernel(A):
    def kernel(pairs):
        best = None
        for u, v in pairs:
            members = np.flatnonzero(A[u] + A[v] == A[u, v])
            level = A[u, members]
            vals = np.where(level[:, None] == level[None, :], A[np.ix_(members, members)], -1)
            top = int(vals.max())
            rows, cols = np.nonzero(vals == top)
            key = min((int(level[i]), int(members[i]), int(members[j])) for i, j in zip(rows, cols))
            candidate = (top, (int(u), int(v)) + key)
            if better(candidate, best):
                best = candidate
        return best
    return kernel


def interval_thinness(graph, d, threads=None):
    """ kappa(G): the largest diameter of a slice S_k(u, v) """
    A = _matrix(d)
    n = A.shape[0]
    if n == 1:
        return 0, None
    # S_k(u,v) = S_{d-k}(v,u), so the smallest maximizer has u <= v
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    value, (u, v, k, x, y) = reduce_partitioned(_thinness_kernel(A), pairs, threads)
    return value, ThinnessWitness(u, v, k, x, y, value)


def _triangle_kernel(A):
    n = A.shape[0]

    def kernel(apexes):
        best = None
        for y in apexes:
            # toward[t] is the mask of I(y, t)
            toward = (A[y][None, :] + A) == A[:, y][:, None]
            for x in range(n):
                for z in range(n):
                    k = (int(A[x, y]) + int(A[z, y]) - int(A[x, z])) // 2
                    level = A[y] == k
                    zs = np.flatnonzero(toward[x] & level)
                    xs = np.flatnonzero(toward[z] & level)
                    block = A[np.ix_(zs, xs)]
                    flat = int(np.argmax(block))
                    zi, xi = divmod(flat, len(xs))
                    candidate = (int(block[zi, xi]),
                                 (x, int(y), z, k, int(zs[zi]), int(xs[xi])))
                    if better(candidate, best):
                        best = candidate
        return best
    return kernel


def slice_triangle_thinness(graph, d, threads=None):
    """Largest d(z', x') over apex triples (x, y, z), k = floor((x|z)_y).

    z' ranges over S_k(y, x) and x' over S_k(y, z).
    """
    A = _matrix(d)
    value, (x, y, z, k, zp, xp) = reduce_partitioned(_triangle_kernel(A), range(A.shape[0]), threads)
    return value, TriangleThinnessWitness(x, y, z, k, zp, xp, value)


def is_block_graph(graph):
    """ True iff every biconnected component is a clique """
    nxg = graph.to_networkx()
    for component in nx.biconnected_components(nxg):
        k = len(component)
        if nxg.subgraph(component).number_of_edges() != k * (k - 1) // 2:
            return False
    return True


def main_bound_x2(i):
    """ 2 * (i + ceil((i+1)/2)), the doubled hyperbolicity bound for alpha_i-metric graphs """
    return 2 * (i + ceil_half(i + 1))


def linear_bound(i):
    """ 2^10 (2i+1), the O(i) bound obtained through (s,s')*-dismantling; reported only """
    return (2 ** 10) * (2 * i + 1)


def invariants_report(graph, d, lambdas=None, threads=None):
    """JSON-ready dict with every invariant of the graph.

    lambdas is an iterable of HalfInteger thresholds for bow_defect; the
    defaults are 0 and the hyperbolicity of the graph.
    """
    index, alpha_w = alpha_index(graph, d, threads)
    delta, hyp_w = hyperbolicity(graph, d, threads)
    kappa, _ = interval_thinness(graph, d, threads)
    tau, _ = slice_triangle_thinness(graph, d, threads)
    _, diam, radius = eccentricities(d)
    if lambdas is None:
        lambdas = sorted({HalfInteger(doubled=0), delta})
    bows = []
    for lam in lambdas:
        mu, _ = bow_defect(graph, d, lam, threads)
        bows.append({"lambda_x2": HalfInteger.of(lam).doubled, "mu": mu})
    logger.info("alpha index %d, hyperbolicity %s", index, delta)
    return {
        "alpha_index": index,
        "alpha_witness": list(alpha_w.as_tuple()) if alpha_w is not None else None,
        "hyperbolicity_x2": delta.doubled,
        "hyp_witness": list(hyp_w.as_tuple()),
        "interval_thinness": kappa,
        "slice_triangle_thinness": tau,
        "bow_defects": bows,
        "diameter": diam,
        "radius": radius,
    }
