"""Graph representation and the edge-list interchange format.

The edge-list format is UTF-8 text with LF newlines. Lines starting with '#'
are comments. The first data line is "n m", followed by exactly m lines
"u v" with 0 <= u, v < n and u != v.
"""
import io
import logging
import sys

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .exceptions import (DisconnectedGraphError, DuplicateEdgeError, EdgeCountError,
                         MalformedEdgeError, MalformedHeaderError, SelfLoopError,
                         VertexOutOfRangeError)

logger = logging.getLogger(__name__)


class Graph():
    """Immutable simple undirected connected graph on vertex ids 0..n-1.

    Parameters:
    -----------
    n: int
        Number of vertices.
    edges: iterable of (int, int)
        Undirected edges. Duplicates (in either orientation), self-loops and
        out-of-range ids are rejected, and so is a disconnected result.
    """
    __slots__ = ("_n", "_adjacency", "_neighbor_sets", "_edges")

    def __init__(self, n, edges):
        if n < 1:
            raise MalformedHeaderError("a graph needs at least one vertex, got n={}".format(n))
        adjacency = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            _check_edge(n, u, v, seen)
            seen.add((min(u, v), max(u, v)))
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._n = n
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._neighbor_sets = tuple(frozenset(nbrs) for nbrs in adjacency)
        self._edges = tuple(sorted(seen))
        missing = self._unreached_vertex()
        if missing is not None:
            raise DisconnectedGraphError(
                "graph is disconnected: vertex {} is not reachable from vertex 0".format(missing))

    def _unreached_vertex(self):
        _, labels = connected_components(self.to_csr(), directed=False)
        stray = np.flatnonzero(labels != labels[0])
        return int(stray[0]) if stray.size else None

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return len(self._edges)

    def vertices(self):
        return range(self._n)

    def edges(self):
        """ Edges as (u, v) with u < v, in lexicographic order """
        return self._edges

    def neighbors(self, v):
        """ Sorted neighbor ids of v """
        return self._adjacency[v]

    def neighbor_set(self, v):
        return self._neighbor_sets[v]

    def closed_neighborhood(self, v):
        return self._neighbor_sets[v] | {v}

    def degree(self, v):
        return len(self._adjacency[v])

    def has_edge(self, u, v):
        return v in self._neighbor_sets[u]

    def relabel(self, permutation):
        """ Graph with vertex v renamed permutation[v] """
        return Graph(self._n, ((permutation[u], permutation[v]) for u, v in self._edges))

    def to_csr(self, removed=None):
        """Symmetric 0/1 adjacency as a scipy CSR matrix.

        removed, when given, is a vertex whose edges are left out.
        """
        kept = [(u, v) for u, v in self._edges if removed not in (u, v)]
        rows = [u for u, v in kept] + [v for u, v in kept]
        cols = [v for u, v in kept] + [u for u, v in kept]
        return csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(self._n, self._n))

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self._edges)
        return graph

    @classmethod
    def from_networkx(cls, graph):
        """ Relabel the nodes of a networkx graph to 0..n-1 in sorted order and build a Graph """
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[a], index[b]) for a, b in graph.edges()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return "Graph(n={}, m={})".format(self._n, self.m)


def _check_edge(n, u, v, seen, line=None):
    if not (0 <= u < n and 0 <= v < n):
        raise VertexOutOfRangeError(
            "edge ({}, {}) uses a vertex id outside 0..{}".format(u, v, n - 1), line)
    if u == v:
        raise SelfLoopError("self-loop on vertex {}".format(u), line)
    if (min(u, v), max(u, v)) in seen:
        raise DuplicateEdgeError("duplicate edge ({}, {})".format(u, v), line)


def _data_lines(text):
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _read_ints(line, number, error_cls, what):
    parts = line.split()
    if len(parts) != 2:
        raise error_cls("expected two integers for {}, got '{}'".format(what, line), number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise error_cls("expected two integers for {}, got '{}'".format(what, line), number)


def parse_graph(data):
    """Parse the edge-list format.

    Parameters:
    -----------
    data: bytes, str or binary/text file object

    Every validation failure is a distinct GraphFormatError subclass carrying
    the offending line number.
    """
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as err:
            raise MalformedHeaderError("input is not valid UTF-8: {}".format(err))
    lines = _data_lines(data)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise MalformedHeaderError("missing 'n m' header", 1)
    n, m = _read_ints(header, header_line, MalformedHeaderError, "the 'n m' header")
    if n < 1 or m < 0:
        raise MalformedHeaderError("header needs n >= 1 and m >= 0, got '{}'".format(header), header_line)

    edges = []
    seen = set()
    last_line = header_line
    for number, line in lines:
        if len(edges) == m:
            raise EdgeCountError("header announced {} edges but more follow".format(m), number)
        u, v = _read_ints(line, number, MalformedEdgeError, "an edge")
        _check_edge(n, u, v, seen, number)
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
        last_line = number
    if len(edges) != m:
        raise EdgeCountError(
            "header announced {} edges but only {} were given".format(m, len(edges)), last_line)
    try:
        graph = Graph(n, edges)
    except DisconnectedGraphError as err:
        raise DisconnectedGraphError(err.message, last_line)
    logger.debug("parsed %r", graph)
    return graph


def write_graph(graph):
    """ Canonical edge-list bytes: header, then edges u < v in lexicographic order """
    out = io.StringIO()
    out.write("{} {}\n".format(graph.n, graph.m))
    for u, v in graph.edges():
        out.write("{} {}\n".format(u, v))
    return out.getvalue().encode("utf-8")


def read_graph_file(path):
    if path == "-":
        return parse_graph(sys.stdin.buffer)
    with open(path, "rb") as handle:
        return parse_graph(handle)


def write_graph_file(graph, path):
    payload = write_graph(graph)
    if path == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        return
    with open(path, "wb") as handle:
        handle.write(payload)
