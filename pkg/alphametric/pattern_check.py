"""Disk convexity, S_1 slice cliques, isometric subgraphs and the alpha_1 characterization."""
import logging
from dataclasses import dataclass

import numpy as np

from .distances import distance_matrix
from .generators import cycle, w6pp

logger = logging.getLogger(__name__)


def _set_mask(n, members):
    mask = np.zeros(n, dtype=bool)
    mask[list(members)] = True
    return mask


def is_convex_set(d, members):
    """True iff I(a, b) stays inside the set for all a, b in it.

    Returns (ok, (a, b, c)) with the lexicographically smallest c in I(a, b)
    outside the set, or (True, None).
    """
    A = d.d
    mask = members if isinstance(members, np.ndarray) and members.dtype == bool else _set_mask(A.shape[0], members)
    inside = np.flatnonzero(mask)
    for a in inside:
        between = (A[a][None, :] + A[inside]) == A[a, inside][:, None]
        escapes = between & ~mask[None, :]
        rows = np.flatnonzero(escapes.any(axis=1))
        if len(rows):
            b = int(inside[rows[0]])
            c = int(np.flatnonzero(escapes[rows[0]])[0])
            return False, (int(a), b, c)
    return True, None


def all_disks_convex(graph, d):
    """ Convexity of D(v, k) for every center v and 1 <= k <= ecc(v); witness (v, k, a, b, c) """
    A = d.d
    for v in range(graph.n):
        for k in range(1, int(A[v].max())):
            ok, witness = is_convex_set(d, A[v] <= k)
            if not ok:
                return False, (v, k) + witness
    return True, None


def s1_slices_clique(graph, d):
    """ S_1(x, y) is a clique whenever d(x, y) >= 2; witness (x, y, a, b) with ab a non-edge """
    A = d.d
    n = graph.n
    for x in range(n):
        for y in range(n):
            if A[x, y] < 2:
                continue
            members = np.flatnonzero((A[x] == 1) & (A[y] == A[x, y] - 1))
            far = np.argwhere(np.triu(A[np.ix_(members, members)] > 1, k=1))
            if len(far):
                i, j = far[0]
                return False, (x, y, int(members[i]), int(members[j]))
    return True, None


@dataclass(frozen=True)
class IsometricEmbedding:
    """ mapping[a] is the host vertex of pattern vertex a """
    mapping: tuple

    def image(self):
        return frozenset(self.mapping)


def placement_order(pattern):
    """ 0 first, then repeatedly the smallest unplaced vertex adjacent to a placed one """
    placed = [0]
    seen = {0}
    frontier = set(pattern.neighbors(0))
    while frontier:
        v = min(frontier)
        frontier.discard(v)
        placed.append(v)
        seen.add(v)
        frontier |= set(pattern.neighbors(v)) - seen
    return placed


def find_isometric_embedding(pattern, host, pattern_d=None, host_d=None):
    """Distance-preserving injection of pattern into host, or None.

    Pattern vertices are placed in placement_order; a host vertex is a
    candidate only if it matches every pattern distance to the vertices
    already placed. Candidates are tried in ascending id, so the first
    complete map is the smallest along the placement order.
    """
    if pattern.n > host.n:
        return None
    P = (distance_matrix(pattern) if pattern_d is None else pattern_d).d
    H = (distance_matrix(host) if host_d is None else host_d).d
    order = placement_order(pattern)
    image = [None] * pattern.n
    used = np.zeros(host.n, dtype=bool)

    def place(depth):
        if depth == len(order):
            return True
        a = order[depth]
        ok = ~used
        for b in order[:depth]:
            ok &= H[image[b]] == P[a, b]
        for h in np.flatnonzero(ok):
            image[a] = int(h)
            used[h] = True
            if place(depth + 1):
                return True
            used[h] = False
        image[a] = None
        return False

    if place(0):
        return IsometricEmbedding(tuple(image))
    return None


def max_isometric_cycle(graph, d):
    """ Length of the longest isometric cycle, 0 for a tree """
    longest = min(2 * int(d.d.max()) + 1, graph.n)
    for length in range(longest, 2, -1):
        if find_isometric_embedding(cycle(length), graph, host_d=d) is not None:
            return length
    return 0


def alpha1_characterization(graph, d):
    """Disks convex and no isometric W_6^{++}.

    Returns (ok, reason) where reason names the failing clause and carries
    its witness, or None when ok.
    """
    convex, witness = all_disks_convex(graph, d)
    if not convex:
        return False, {"clause": "disk-convexity", "witness": list(witness)}
    embedding = find_isometric_embedding(w6pp(), graph, host_d=d)
    if embedding is not None:
        return False, {"clause": "isometric-w6pp", "witness": list(embedding.mapping)}
    return True, None


def check_equality_case(graph, d):
    """Equality d(u,y) = d(u,x) + d(v,y) against the distance-2 neighbor pair condition.

    Over every edge xv with v in I(x, y) and x in I(v, u), the equality must
    hold exactly when some x' ~ x in I(x, u) and v' ~ v in I(v, y) satisfy
    d(x', v') = 2. Returns (ok, smallest (x, y, v, u) where they disagree,
    configurations checked).
    """
    A = d.d.astype(np.int64)
    worst = None
    checked = 0
    for x in range(graph.n):
        for v in graph.neighbors(x):
            ys = np.flatnonzero(A[x] == A[v] + 1)
            us = np.flatnonzero(A[v] == A[x] + 1)
            if not len(ys) or not len(us):
                continue
            checked += len(ys) * len(us)
            equal = A[np.ix_(us, ys)] == A[us, x][:, None] + A[v, ys][None, :]
            x_nbrs = np.array(graph.neighbors(x))
            v_nbrs = np.array(graph.neighbors(v))
            toward_u = (A[np.ix_(x_nbrs, us)] == A[x, us][None, :] - 1).astype(np.int64)
            toward_y = (A[np.ix_(v_nbrs, ys)] == A[v, ys][None, :] - 1).astype(np.int64)
            apart = (A[np.ix_(x_nbrs, v_nbrs)] == 2).astype(np.int64)
            pair = (toward_u.T @ apart @ toward_y) > 0
            bad = np.argwhere(equal != pair)
            if len(bad):
                ui, yi = min(bad.tolist(), key=lambda cell: (ys[cell[1]], us[cell[0]]))
                candidate = (x, int(ys[yi]), v, int(us[ui]))
                if worst is None or candidate < worst:
                    worst = candidate
    return worst is None, worst, checked
