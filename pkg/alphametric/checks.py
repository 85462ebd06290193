"""Theorem harness: every metric property as a named, independently runnable check.

A check takes a GraphContext and returns a CheckResult. Checks whose
hypothesis does not hold for the graph (say an alpha_1-only lemma on a graph
with alpha index 2) pass vacuously with applicable=False. Witnesses carry
every vertex, distance and radius needed to re-verify a failure by hand.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import networkx as nx
import numpy as np

from .dismantling import bfs_ordering, is_dismantling_ordering, is_ss_dismantling_ordering
from .distances import distance_matrix, eccentricities
from .exceptions import AlphaMetricError, HullCapError, InvariantViolation, SizeCapError, UnknownCheckError
from .generators import g_p
from .globals import globals as g
from .half_integer import HalfInteger, ceil_half
from .invariants import (alpha_index, bow_defect, hyperbolicity, interval_thinness, is_block_graph,
                         main_bound_x2, slice_triangle_thinness)
from .metric_triangles import enumerate_metric_triangles, quasi_median
from .pattern_check import (all_disks_convex, alpha1_characterization, check_equality_case,
                            max_isometric_cycle, s1_slices_clique)
from .transforms import injective_hull, is_helly, power, subdivide

logger = logging.getLogger(__name__)

HULL_MAX_VERTICES = 8
ALPHA1_TRIANGLE_TYPES = frozenset([(1, 1, 1), (1, 2, 2), (2, 2, 2)])


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: dict = None
    configurations_checked: int = 0
    applicable: bool = True

    def as_report(self):
        return {
            "check": self.name,
            "pass": self.passed,
            "witness": self.witness,
            "configurations_checked": self.configurations_checked,
            "applicable": self.applicable,
        }


@dataclass
class _Tally:
    """ Counts configurations and remembers the first failure """
    name: str
    checked: int = 0
    witness: dict = field(default=None)

    def fail(self, **witness):
        if self.witness is None:
            self.witness = witness

    @property
    def failed(self):
        return self.witness is not None

    def result(self):
        return CheckResult(self.name, self.witness is None, self.witness, self.checked)


def _skip(name):
    return CheckResult(name, True, None, 0, applicable=False)


class GraphContext():
    """Lazily computed invariants of one graph, shared by all checks run on it.

    Parameters:
    -----------
    graph: Graph
    threads: int
        Worker pool size for the invariant kernels.
    label: str
        Name used in log lines and reports.
    """

    def __init__(self, graph, threads=None, label=None):
        self.graph = graph
        self.threads = threads
        self.label = label or repr(graph)

    @cached_property
    def d(self):
        return distance_matrix(self.graph)

    @cached_property
    def A(self):
        return self.d.d.astype(np.int64)

    @cached_property
    def adjacency(self):
        return self.d.d == 1

    @cached_property
    def alpha(self):
        return alpha_index(self.graph, self.d, self.threads)

    @property
    def i(self):
        return self.alpha[0]

    @cached_property
    def delta(self):
        return hyperbolicity(self.graph, self.d, self.threads)[0]

    @cached_property
    def kappa(self):
        return interval_thinness(self.graph, self.d, self.threads)[0]

    @cached_property
    def eccentricity(self):
        return eccentricities(self.d)

    @property
    def diam(self):
        return self.eccentricity[1]

    @cached_property
    def hull(self):
        """ HullGraph when the graph is small enough and its hull fits the cap, else None """
        if self.graph.n > HULL_MAX_VERTICES:
            return None
        try:
            return injective_hull(self.graph, g.hull_cap, self.d)
        except HullCapError as err:
            logger.warning("%s: %s; hull checks skipped", self.label, err)
            return None

    @cached_property
    def hull_d(self):
        return distance_matrix(self.hull.hull)


CHECKS = {}


def check(name):
    def register(fn):
        CHECKS[name] = fn
        return fn
    return register


def _pairs_and_radii(A, diam):
    n = A.shape[0]
    for u in range(n):
        for v in range(u, n):
            for ru in range(diam + 1):
                for rv in range(max(0, int(A[u, v]) - ru), diam + 1):
                    yield u, v, ru, rv


def _min_third_radius(A, u, v, ru, rv):
    """ Smallest r_w making D(w, r_w) meet both D(u, r_u) and D(v, r_v), for every w """
    return np.maximum(0, np.maximum(A[u] - ru, A[v] - rv))


@check("three-balls")
def check_three_balls(ctx):
    """Pairwise intersecting D(u,r_u), D(v,r_v), D(w,r_w) have a common x up to i on w's radius."""
    tally = _Tally("three-balls")
    A, i = ctx.A, ctx.i
    for u, v, ru, rv in _pairs_and_radii(A, ctx.diam):
        inter = (A[u] <= ru) & (A[v] <= rv)
        rw = _min_third_radius(A, u, v, ru, rv)
        reach = A[:, inter].min(axis=1)
        tally.checked += len(rw)
        bad = np.flatnonzero(reach - rw > i)
        if len(bad):
            w = int(bad[0])
            tally.fail(u=u, v=v, w=w, r_u=ru, r_v=rv, r_w=int(rw[w]),
                       closest_distance=int(reach[w]), alpha_index=i)
            break
    return tally.result()


@check("aux-gd")
def check_aux_gd(ctx):
    """x in I(u,v), d(u,x) = d(u,y), d(v,y) <= d(v,x) + k imply d(x,y) <= k + i + 2."""
    tally = _Tally("aux-gd")
    A, i, n = ctx.A, ctx.i, ctx.graph.n
    for u in range(n):
        for v in range(n):
            xs = np.flatnonzero(A[u] + A[v] == A[u, v])
            same = A[u, xs][:, None] == A[u][None, :]
            k = np.maximum(0, A[v][None, :] - A[v, xs][:, None])
            excess = np.where(same, A[xs] - k, -1)
            tally.checked += int(same.sum())
            bad = np.argwhere(excess > i + 2)
            if len(bad):
                xi, y = bad[0]
                x = int(xs[xi])
                tally.fail(u=u, v=v, x=x, y=int(y), k=int(k[xi, y]), d_xy=int(A[x, y]), alpha_index=i)
                return tally.result()
    return tally.result()


@check("thinness")
def check_thinness(ctx):
    tally = _Tally("thinness", checked=1)
    if ctx.kappa > ctx.i + 1:
        tally.fail(interval_thinness=ctx.kappa, alpha_index=ctx.i, bound=ctx.i + 1)
    return tally.result()


@check("subdivision-thinness")
def check_subdivision_thinness(ctx):
    tally = _Tally("subdivision-thinness", checked=1)
    sub, _ = subdivide(ctx.graph)
    kappa, witness = interval_thinness(sub, distance_matrix(sub), ctx.threads)
    if kappa > 2 * ctx.i + 12:
        tally.fail(subdivision_thinness=kappa, alpha_index=ctx.i, bound=2 * ctx.i + 12,
                   slice=list(witness.as_tuple()))
    return tally.result()


@check("dismantl-i")
def check_dismantl_i(ctx):
    """ Every BFS ordering of G dismantles G^(i+1) """
    tally = _Tally("dismantl-i")
    powered = power(ctx.graph, ctx.i + 1, ctx.d)
    for u in range(ctx.graph.n):
        ordering = bfs_ordering(ctx.graph, u)
        ok, fail_k = is_dismantling_ordering(powered, ordering)
        tally.checked += 1
        if not ok:
            tally.fail(base=u, ordering=list(ordering.order), fail_k=fail_k, power=ctx.i + 1)
            break
    return tally.result()


@check("ss-star")
def check_ss_star(ctx):
    """ BFS orderings are (r, ceil(r/2) + 2i + 1)* dismantling for 1 <= r <= 2 diam """
    tally = _Tally("ss-star")
    for u in range(ctx.graph.n):
        ordering = bfs_ordering(ctx.graph, u)
        for r in range(1, 2 * ctx.diam + 1):
            s_prime = ceil_half(r) + 2 * ctx.i + 1
            ok, fail_k = is_ss_dismantling_ordering(ctx.graph, ordering, r, s_prime, True, ctx.d)
            tally.checked += 1
            if not ok:
                tally.fail(base=u, ordering=list(ordering.order), fail_k=fail_k, s=r, s_prime=s_prime)
                return tally.result()
    return tally.result()


@check("triangle-thinness")
def check_triangle_thinness(ctx):
    tally = _Tally("triangle-thinness", checked=1)
    tau, witness = slice_triangle_thinness(ctx.graph, ctx.d, ctx.threads)
    if tau > 3 * (ctx.i + 1):
        tally.fail(slice_triangle_thinness=tau, alpha_index=ctx.i, bound=3 * (ctx.i + 1),
                   triple=list(witness.as_tuple()))
    return tally.result()


@check("main-bound")
def check_main_bound(ctx):
    tally = _Tally("main-bound", checked=1)
    bound = main_bound_x2(ctx.i)
    if ctx.delta.doubled > bound:
        tally.fail(hyperbolicity_x2=ctx.delta.doubled, alpha_index=ctx.i, bound_x2=bound)
    return tally.result()


@check("alpha1-hyp")
def check_alpha1_hyp(ctx):
    if ctx.i > 1:
        return _skip("alpha1-hyp")
    tally = _Tally("alpha1-hyp", checked=1)
    if ctx.delta.doubled > 2:
        tally.fail(hyperbolicity_x2=ctx.delta.doubled, alpha_index=ctx.i)
    return tally.result()


@check("triangle-types")
def check_triangle_types(ctx):
    if ctx.i > 1:
        return _skip("triangle-types")
    tally = _Tally("triangle-types")
    triangles, _ = enumerate_metric_triangles(ctx.graph, ctx.d, ctx.threads)
    for t in triangles:
        tally.checked += 1
        if t.sorted_type not in ALPHA1_TRIANGLE_TYPES:
            tally.fail(vertices=[t.u, t.v, t.w], type=list(t.type))
            break
    return tally.result()


@check("quasi-median")
def check_quasi_median(ctx):
    """ The corner descent ends at a quasi-median for every triple """
    tally = _Tally("quasi-median")
    n = ctx.graph.n
    for u in range(n):
        for v in range(u, n):
            for w in range(v, n):
                tally.checked += 1
                try:
                    quasi_median(ctx.graph, ctx.d, u, v, w)
                except InvariantViolation as err:
                    tally.fail(triple=[u, v, w], reason=str(err))
                    return tally.result()
    return tally.result()


def _common_neighbor(adjacency, x, y, mask):
    return bool((adjacency[x] & adjacency[y] & mask).any())


@check("c3")
def check_c3(ctx):
    """ Adjacent x, y in S_k(u,v) have common neighbors in S_{k-1}(u,v) and S_{k+1}(u,v) """
    if ctx.i > 1:
        return _skip("c3")
    tally = _Tally("c3")
    A, adj, n = ctx.A, ctx.adjacency, ctx.graph.n
    for u in range(n):
        for v in range(u + 1, n):
            on = A[u] + A[v] == A[u, v]
            duv = int(A[u, v])
            for k in range(1, duv):
                level = np.flatnonzero(on & (A[u] == k))
                for x, y in combinations(level.tolist(), 2):
                    if not adj[x, y]:
                        continue
                    tally.checked += 1
                    for side in (k - 1, k + 1):
                        if not _common_neighbor(adj, x, y, on & (A[u] == side)):
                            tally.fail(u=u, v=v, k=k, x=x, y=y, missing_slice=side)
                            return tally.result()
    return tally.result()


def _c5_anchor(adj, x, y, anchor):
    """ Every z in N(x) cap N(anchor), w in N(y) cap N(anchor) closes an induced C_5 """
    zs = np.flatnonzero(adj[x] & adj[anchor])
    ws = np.flatnonzero(adj[y] & adj[anchor])
    for z in zs:
        for w in ws:
            if z == w or adj[z, w] or adj[x, w] or adj[z, y]:
                return False
    return True


@check("c3-or-c5")
def check_c3_or_c5(ctx):
    """ Edge xy equidistant k from u: a common neighbor at k-1, or a C_5 anchor at k-2 """
    if ctx.i > 1:
        return _skip("c3-or-c5")
    tally = _Tally("c3-or-c5")
    A, adj = ctx.A, ctx.adjacency
    for x, y in ctx.graph.edges():
        for u in np.flatnonzero((A[x] == A[y]) & (A[x] >= 1)).tolist():
            k = int(A[u, x])
            tally.checked += 1
            if _common_neighbor(adj, x, y, A[u] == k - 1):
                continue
            anchors = np.flatnonzero((A[x] == 2) & (A[y] == 2) & (A[u] == k - 2))
            if not any(_c5_anchor(adj, x, y, a) for a in anchors.tolist()):
                tally.fail(x=x, y=y, u=u, k=k, anchors=anchors.tolist())
                return tally.result()
    return tally.result()


@check("alpha1-thinness")
def check_alpha1_thinness(ctx):
    """ With d(u,v) = r_u + r_v, all of S_{r_u}(u,v) lies within r_w + 2 of w """
    if ctx.i > 1:
        return _skip("alpha1-thinness")
    tally = _Tally("alpha1-thinness")
    A, n = ctx.A, ctx.graph.n
    for u in range(n):
        for v in range(n):
            duv = int(A[u, v])
            for ru in range(duv + 1):
                rv = duv - ru
                members = (A[u] + A[v] == duv) & (A[u] == ru)
                rw = _min_third_radius(A, u, v, ru, rv)
                far = A[:, members].max(axis=1) - rw
                tally.checked += n
                bad = np.flatnonzero(far > 2)
                if len(bad):
                    w = int(bad[0])
                    xs = np.flatnonzero(members)
                    x = int(xs[int(np.argmax(A[w, xs]))])
                    tally.fail(u=u, v=v, w=w, x=x, r_u=ru, r_v=rv, r_w=int(rw[w]), d_wx=int(A[w, x]))
                    return tally.result()
    return tally.result()


@check("close-balls")
def check_close_balls(ctx):
    """ With d(u,v) = r_u + r_v and a, b reaching both disks, d(a,b) <= r_a + r_b + 2 """
    if ctx.i > 1:
        return _skip("close-balls")
    tally = _Tally("close-balls")
    A, n = ctx.A, ctx.graph.n
    for u in range(n):
        for v in range(u, n):
            duv = int(A[u, v])
            for ru in range(duv + 1):
                rv = duv - ru
                R = _min_third_radius(A, u, v, ru, rv)
                excess = A - R[:, None] - R[None, :]
                tally.checked += n * n
                bad = np.argwhere(excess > 2)
                if len(bad):
                    a, b = (int(t) for t in bad[0])
                    tally.fail(u=u, v=v, a=a, b=b, r_u=ru, r_v=rv, r_a=int(R[a]), r_b=int(R[b]),
                               d_ab=int(A[a, b]))
                    return tally.result()
    return tally.result()


@check("equality-case")
def check_equality(ctx):
    if ctx.i > 1:
        return _skip("equality-case")
    ok, worst, checked = check_equality_case(ctx.graph, ctx.d)
    witness = None if ok else dict(zip(("x", "y", "v", "u"), worst))
    return CheckResult("equality-case", ok, witness, checked)


@check("charact")
def check_charact(ctx):
    """ alpha index <= 1 iff disks convex and no isometric W_6^{++} """
    tally = _Tally("charact", checked=1)
    ok, reason = alpha1_characterization(ctx.graph, ctx.d)
    if ok != (ctx.i <= 1):
        tally.fail(alpha_index=ctx.i, characterization=ok, reason=reason)
    return tally.result()


@check("convex-criterion")
def check_convex_criterion(ctx):
    """ Disks convex iff no isometric cycle longer than 5 and all S_1 slices are cliques """
    tally = _Tally("convex-criterion", checked=1)
    convex, convex_witness = all_disks_convex(ctx.graph, ctx.d)
    longest = max_isometric_cycle(ctx.graph, ctx.d)
    cliques, clique_witness = s1_slices_clique(ctx.graph, ctx.d)
    if convex != (longest <= 5 and cliques):
        tally.fail(disks_convex=convex, disk_witness=convex_witness, max_isometric_cycle=longest,
                   s1_cliques=cliques, slice_witness=clique_witness)
    return tally.result()


@check("diam-approx")
def check_diam_approx(ctx):
    """ Any vertex furthest from any start has eccentricity >= diam - 2 """
    if ctx.i > 1:
        return _skip("diam-approx")
    tally = _Tally("diam-approx")
    ecc, diam, _ = ctx.eccentricity
    A = ctx.A
    for s in range(ctx.graph.n):
        for f in np.flatnonzero(A[s] == ecc[s]).tolist():
            tally.checked += 1
            if ecc[f] < diam - 2:
                tally.fail(start=s, furthest=f, eccentricity=ecc[f], diameter=diam)
                return tally.result()
    return tally.result()


@check("bow")
def check_bow(ctx):
    """ (delta, 2 delta)-bow metric """
    tally = _Tally("bow", checked=1)
    mu, witness = bow_defect(ctx.graph, ctx.d, ctx.delta, ctx.threads)
    if mu > ctx.delta.doubled:
        tally.fail(mu=mu, lambda_x2=ctx.delta.doubled, quadruple=list(witness.as_tuple()))
    return tally.result()


@check("bow-alpha")
def check_bow_alpha(ctx):
    """ (0, mu)-bow defect equals the alpha index """
    tally = _Tally("bow-alpha", checked=1)
    mu, witness = bow_defect(ctx.graph, ctx.d, HalfInteger(doubled=0), ctx.threads)
    if mu != ctx.i:
        tally.fail(mu=mu, alpha_index=ctx.i,
                   quadruple=list(witness.as_tuple()) if witness is not None else None)
    return tally.result()


@check("hull-hyp")
def check_hull_hyp(ctx):
    """ The hull embeds G isometrically and has the same hyperbolicity """
    hull = ctx.hull
    if hull is None:
        return _skip("hull-hyp")
    tally = _Tally("hull-hyp", checked=1)
    D, emb = ctx.hull_d.d, list(hull.embedding)
    if not np.array_equal(D[np.ix_(emb, emb)], ctx.d.d):
        tally.fail(reason="embedding is not isometric", embedding=emb)
        return tally.result()
    hull_delta, _ = hyperbolicity(hull.hull, ctx.hull_d, ctx.threads)
    if hull_delta != ctx.delta:
        tally.fail(hyperbolicity_x2=ctx.delta.doubled, hull_hyperbolicity_x2=hull_delta.doubled)
    return tally.result()


@check("hull-helly")
def check_hull_helly(ctx):
    """ The hull is Helly and 2 delta(H) <= 2 ceil(kappa(H) / 2) """
    hull = ctx.hull
    if hull is None:
        return _skip("hull-helly")
    tally = _Tally("hull-helly", checked=1)
    if not is_helly(hull.hull, ctx.hull_d):
        tally.fail(reason="hull is not Helly", hull_size=hull.size)
        return tally.result()
    hull_delta, _ = hyperbolicity(hull.hull, ctx.hull_d, ctx.threads)
    hull_kappa, _ = interval_thinness(hull.hull, ctx.hull_d, ctx.threads)
    if hull_delta.doubled > 2 * ceil_half(hull_kappa):
        tally.fail(hull_hyperbolicity_x2=hull_delta.doubled, hull_interval_thinness=hull_kappa)
    return tally.result()


@check("hull-dist")
def check_hull_dist(ctx):
    """ d(x,v) <= d(y,v) + lambda over original v forces d(x,y) <= lambda in the hull """
    hull = ctx.hull
    if hull is None:
        return _skip("hull-dist")
    tally = _Tally("hull-dist")
    D = ctx.hull_d.d.astype(np.int64)
    to_orig = D[:, list(hull.embedding)]
    for x in range(hull.size):
        lam = (to_orig[x][None, :] - to_orig).max(axis=1)
        tally.checked += hull.size
        bad = np.flatnonzero(D[x] > lam)
        if len(bad):
            y = int(bad[0])
            tally.fail(x=x, y=y, lam=int(lam[y]), d_xy=int(D[x, y]))
            break
    return tally.result()


@check("hull-max-sp")
def check_hull_max_sp(ctx):
    """ Every hull pair x, y lies on a shortest path between two original vertices """
    hull = ctx.hull
    if hull is None:
        return _skip("hull-max-sp")
    tally = _Tally("hull-max-sp")
    D = ctx.hull_d.d.astype(np.int64)
    emb = list(hull.embedding)
    between = D[np.ix_(emb, emb)]
    for x in range(hull.size):
        through = D[emb, x][None, :, None] + D[x][:, None, None] + D[:, emb][:, None, :]
        covered = (through == between[None, :, :]).any(axis=(1, 2))
        tally.checked += hull.size
        bad = np.flatnonzero(~covered)
        if len(bad):
            tally.fail(x=x, y=int(bad[0]), d_xy=int(D[x, bad[0]]))
            break
    return tally.result()


@check("hull-thinness")
def check_hull_thinness(ctx):
    """ For alpha_1 graphs, hull slices between original vertices have diameter <= 2 """
    if ctx.i > 1 or ctx.hull is None:
        return _skip("hull-thinness")
    tally = _Tally("hull-thinness")
    D = ctx.hull_d.d.astype(np.int64)
    emb = ctx.hull.embedding
    for a, b in combinations(emb, 2):
        members = np.flatnonzero(D[a] + D[b] == D[a, b])
        level = D[a, members]
        same = level[:, None] == level[None, :]
        spread = np.where(same, D[np.ix_(members, members)], 0)
        tally.checked += 1
        if spread.max() > 2:
            p, q = np.unravel_index(int(np.argmax(spread)), spread.shape)
            tally.fail(a=int(a), b=int(b), x=int(members[p]), y=int(members[q]), d_xy=int(spread[p, q]))
            break
    return tally.result()


def gp_expected_distance(p, a, b):
    """Closed-form distance between vertices a, b of g_p(p)."""
    (ra, i), (rb, j) = divmod(a, p), divmod(b, p)
    rows = "wxyz"
    ra, rb = rows[ra], rows[rb]
    if a == b:
        return 0
    if (ra, rb) in (("y", "y"), ("z", "z")):
        return abs(j - i)
    if {ra, rb} == {"y", "z"}:
        return 2 if i == j else abs(j - i) + 1
    if ra in "yz" and rb in "wx":
        return gp_expected_distance(p, b, a)
    if ra == "x" and rb in "yz":
        return 1 + j - i if j >= i else i - j
    if ra == "w" and rb in "yz":
        return 1 + i - j if j <= i else j - i
    if ra == rb:
        return abs(j - i) + 1
    if ra == "w":
        return gp_expected_distance(p, b, a)
    if i <= j:
        return j - i + 2
    if i == j + 1:
        return 2
    return i - j


@check("gp-distances")
def check_gp_distances(ctx):
    """ Distances of g_p match the closed-form rules """
    n = ctx.graph.n
    if n % 4 or ctx.graph != g_p(n // 4):
        return _skip("gp-distances")
    p = n // 4
    tally = _Tally("gp-distances")
    A = ctx.A
    for a in range(n):
        for b in range(n):
            tally.checked += 1
            expected = gp_expected_distance(p, a, b)
            if A[a, b] != expected:
                tally.fail(a=a, b=b, distance=int(A[a, b]), expected=expected, p=p)
                return tally.result()
    return tally.result()


@check("thinness-hyp")
def check_thinness_hyp(ctx):
    """ kappa <= 2 delta """
    tally = _Tally("thinness-hyp", checked=1)
    if ctx.kappa > ctx.delta.doubled:
        tally.fail(interval_thinness=ctx.kappa, hyperbolicity_x2=ctx.delta.doubled)
    return tally.result()


@check("hyp-alpha")
def check_hyp_alpha(ctx):
    """ delta = 0 gives alpha index 0, delta <= 1/2 gives alpha index <= 1 """
    tally = _Tally("hyp-alpha", checked=1)
    doubled = ctx.delta.doubled
    if (doubled == 0 and ctx.i > 0) or (doubled <= 1 and ctx.i > 1):
        tally.fail(hyperbolicity_x2=doubled, alpha_index=ctx.i)
    return tally.result()


@check("block-graph")
def check_block_graph(ctx):
    """ delta = 0 iff every biconnected component is a clique """
    tally = _Tally("block-graph", checked=1)
    block = is_block_graph(ctx.graph)
    if block != (ctx.delta.doubled == 0):
        tally.fail(block_graph=block, hyperbolicity_x2=ctx.delta.doubled)
    return tally.result()


@check("chordal-hyp")
def check_chordal_hyp(ctx):
    """ Chordal graphs have delta <= 1 and alpha index <= 1 """
    if not nx.is_chordal(ctx.graph.to_networkx()):
        return _skip("chordal-hyp")
    tally = _Tally("chordal-hyp", checked=1)
    if ctx.delta.doubled > 2 or ctx.i > 1:
        tally.fail(hyperbolicity_x2=ctx.delta.doubled, alpha_index=ctx.i)
    return tally.result()


def check_names():
    return sorted(CHECKS)


def resolve_checks(names):
    """ Validate a list of check ids; None or "all" selects every check """
    if names is None or list(names) == ["all"]:
        return check_names()
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise UnknownCheckError(unknown[0], check_names())
    return list(names)


def run_check(name, ctx):
    """Run one registered check.

    A check that outgrows a size cap is reported as not applicable; any
    other package error raised by the check becomes a failed result carrying
    the message, so one bad graph never aborts a corpus run.
    """
    if name not in CHECKS:
        raise UnknownCheckError(name, check_names())
    try:
        result = CHECKS[name](ctx)
    except SizeCapError as err:
        logger.warning("%s: check %s skipped: %s", ctx.label, name, err)
        return CheckResult(name, True, {"skipped": str(err)}, 0, applicable=False)
    except AlphaMetricError as err:
        result = CheckResult(name, False, {"error": type(err).__name__, "message": str(err)})
    if not result.passed:
        logger.warning("%s: check %s failed: %s", ctx.label, name, result.witness)
    else:
        logger.debug("%s: check %s passed (%d configurations)", ctx.label, name, result.configurations_checked)
    return result


def run_checks(graph, names=None, threads=None, label=None):
    """ Run the named checks on one graph, sharing invariants between them """
    ctx = GraphContext(graph, threads, label)
    return [run_check(name, ctx) for name in resolve_checks(names)]
