"""Deterministic graph families and seeded random corpora.

Random families draw from numpy's PCG64 bit generator seeded with the given
64-bit seed, so a (family, params, seed) triple always yields the same graph.
"""
import logging
from itertools import combinations

import numpy as np

from .exceptions import ParameterError
from .graph import Graph

logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def _rng(seed):
    _require(0 <= seed < 2 ** 64, "seed must be a 64-bit unsigned integer, got {}".format(seed))
    return np.random.Generator(np.random.PCG64(seed))


def path(n):
    _require(n >= 1, "path needs n >= 1, got {}".format(n))
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n):
    _require(n >= 3, "cycle needs n >= 3, got {}".format(n))
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n):
    _require(n >= 1, "complete graph needs n >= 1, got {}".format(n))
    return Graph(n, combinations(range(n), 2))


def star(n):
    """ Center 0 and leaves 1..n-1 """
    _require(n >= 1, "star needs n >= 1, got {}".format(n))
    return Graph(n, ((0, i) for i in range(1, n)))


def hypercube(dim):
    _require(0 <= dim <= 12, "hypercube needs 0 <= dim <= 12, got {}".format(dim))
    n = 1 << dim
    return Graph(n, ((v, v | (1 << b)) for v in range(n) for b in range(dim) if not v & (1 << b)))


def g_p(p):
    """Four rows W, X, Y, Z of p vertices; w_i = i, x_i = p+i, y_i = 2p+i, z_i = 3p+i.

    Y and Z are paths; x_i, y_i, w_i, z_i induce a C_4; w_i sees y_{i+1} and
    z_{i+1}; x_i sees y_{i-1} and z_{i-1}.
    """
    _require(p >= 1, "g_p needs p >= 1, got {}".format(p))
    w, x, y, z = (lambda i: i), (lambda i: p + i), (lambda i: 2 * p + i), (lambda i: 3 * p + i)
    edges = []
    for i in range(p):
        edges += [(x(i), y(i)), (y(i), w(i)), (w(i), z(i)), (z(i), x(i))]
        if i + 1 < p:
            edges += [(y(i), y(i + 1)), (z(i), z(i + 1)), (w(i), y(i + 1)), (w(i), z(i + 1))]
        if i >= 1:
            edges += [(x(i), y(i - 1)), (x(i), z(i - 1))]
    return Graph(4 * p, edges)


def g_p_vertex(p, row, i):
    """ Id of w_i, x_i, y_i or z_i in g_p(p) """
    offset = "wxyz".index(row)
    _require(0 <= i < p, "g_p index {} outside 0..{}".format(i, p - 1))
    return offset * p + i


def triangular_grid(n):
    """ a_j = j and b_j = n+j with rungs, rails and diagonals b_j a_{j+1} """
    _require(n >= 2, "triangular_grid needs n >= 2, got {}".format(n))
    edges = [(j, n + j) for j in range(n)]
    for j in range(n - 1):
        edges += [(j, j + 1), (n + j, n + j + 1), (n + j, j + 1)]
    return Graph(2 * n, edges)


def ladder(l):
    """ 2 x (l+1) grid; a_j = j, b_j = l+1+j """
    _require(l >= 1, "ladder needs l >= 1, got {}".format(l))
    width = l + 1
    edges = [(j, width + j) for j in range(width)]
    for j in range(l):
        edges += [(j, j + 1), (width + j, width + j + 1)]
    return Graph(2 * width, edges)


def w6pp():
    """ Rim 0..5, hub 6, p = 7 on rim 1 and 2, q = 8 on rim 3 and 4 """
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(i, 6) for i in range(6)]
    edges += [(1, 7), (2, 7), (3, 8), (4, 8)]
    return Graph(9, edges)


def distinguished(family, params):
    """ The corners u, x, v, w of triangular_grid and ladder """
    if family == "triangular_grid":
        n = params["n"]
        return {"u": 0, "x": n, "v": n - 1, "w": 2 * n - 1}
    if family == "ladder":
        l = params["l"]
        return {"u": 0, "x": l + 1, "v": l, "w": 2 * l + 1}
    raise ParameterError("family {} has no distinguished vertices".format(family))


def random_tree(n, seed=0):
    _require(n >= 1, "random_tree needs n >= 1, got {}".format(n))
    rng = _rng(seed)
    return Graph(n, ((i, int(rng.integers(i))) for i in range(1, n)))


def random_connected(n, m, seed=0):
    """ Random spanning tree plus m - (n-1) distinct extra edges """
    top = n * (n - 1) // 2
    _require(n >= 1, "random_connected needs n >= 1, got {}".format(n))
    _require(n - 1 <= m <= top, "random_connected needs {} <= m <= {}, got {}".format(n - 1, top, m))
    rng = _rng(seed)
    edges = {(int(rng.integers(i)), i) for i in range(1, n)}
    rest = [e for e in combinations(range(n), 2) if e not in edges]
    for k in rng.permutation(len(rest))[: m - (n - 1)]:
        edges.add(rest[int(k)])
    return Graph(n, sorted(edges))


def random_chordal(n, seed=0):
    """Chordal graph grown along a perfect elimination ordering.

    Vertex i attaches to a random earlier vertex and to a random clique among
    that vertex's earlier neighbors, so every vertex is simplicial when added.
    """
    _require(n >= 1, "random_chordal needs n >= 1, got {}".format(n))
    rng = _rng(seed)
    adjacency = [set() for _ in range(n)]
    for i in range(1, n):
        anchor = int(rng.integers(i))
        clique = [anchor]
        for c in rng.permutation(sorted(adjacency[anchor])):
            c = int(c)
            if rng.random() < 0.5 and all(c in adjacency[k] for k in clique):
                clique.append(c)
        for c in clique:
            adjacency[i].add(c)
            adjacency[c].add(i)
    return Graph(n, ((u, v) for u in range(n) for v in adjacency[u] if u < v))


def random_block(n, seed=0):
    """ Cliques of 2 to 4 vertices glued at random cut vertices """
    _require(n >= 1, "random_block needs n >= 1, got {}".format(n))
    rng = _rng(seed)
    edges = []
    count = 1
    while count < n:
        cut = int(rng.integers(count))
        size = min(int(rng.integers(1, 4)), n - count)
        block = [cut] + list(range(count, count + size))
        edges += list(combinations(block, 2))
        count += size
    return Graph(n, edges)


FAMILIES = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "star": (star, ("n",)),
    "hypercube": (hypercube, ("dim",)),
    "g_p": (g_p, ("p",)),
    "triangular_grid": (triangular_grid, ("n",)),
    "ladder": (ladder, ("l",)),
    "w6pp": (w6pp, ()),
    "random_connected": (random_connected, ("n", "m")),
    "random_chordal": (random_chordal, ("n",)),
    "random_tree": (random_tree, ("n",)),
    "random_block": (random_block, ("n",)),
}

RANDOM_FAMILIES = frozenset(name for name in FAMILIES if name.startswith("random_"))


def parse_params(text):
    """ "k=v,k2=v2" -> {"k": int, ...} """
    params = {}
    if not text:
        return params
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ParameterError("expected key=value, got '{}'".format(item))
        try:
            params[key] = int(value)
        except ValueError:
            raise ParameterError("parameter {} must be an integer, got '{}'".format(key, value))
    return params


def generate(family, params=None, seed=0):
    """Build a graph of the named family.

    Parameters:
    -----------
    family: str
        One of FAMILIES.
    params: dict
        Exactly the family's parameter names mapped to integers.
    seed: int
        Used by the random families only.
    """
    if family not in FAMILIES:
        raise ParameterError("unknown family '{}'; known: {}".format(family, ", ".join(sorted(FAMILIES))))
    builder, names = FAMILIES[family]
    params = dict(params or {})
    if set(params) != set(names):
        raise ParameterError("family {} takes parameters ({}), got ({})".format(
            family, ", ".join(names), ", ".join(sorted(params))))
    args = [params[name] for name in names]
    if family in RANDOM_FAMILIES:
        return builder(*args, seed=seed)
    return builder(*args)
