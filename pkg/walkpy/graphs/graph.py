"""Undirected simple connected graphs, the arena of the random walk"""

import hashlib
import logging

import numpy as np
import networkx as nx

from walkpy.errors import EmptyGraphError, SelfLoopError, DuplicateEdgeError,\
    DisconnectedGraphError, NodeIndexError, EdgeListFormatError

_log = logging.getLogger(__name__)


class Graph(object):
    """Validated, immutable undirected simple connected graph on nodes 0..n-1

    Construct through `build_graph`, `generate_graph` or `parse_edge_list`; the
    constructor trusts its arguments.

    Attributes
    ----------
    n : int
        Node count
    edges : tuple of (int, int)
        Canonical sorted edge list, each pair with i < j
    degree : ndarray, shape (n,)
        Read-only per-node edge count
    indptr, indices : ndarray
        CSR adjacency; neighbors of i are indices[indptr[i]:indptr[i + 1]], ascending

    Notes
    -----
    Equality and hashing use the canonical edge list, not isomorphism.
    """

    def __init__(self, n, edges):
        self._n = int(n)
        self._edges = tuple(sorted(edges))
        degree = np.zeros(self._n, dtype=np.int64)
        neighbors = [[] for _ in range(self._n)]
        for i, j in self._edges:
            degree[i] += 1
            degree[j] += 1
            neighbors[i].append(j)
            neighbors[j].append(i)
        degree.setflags(write=False)
        self._degree = degree
        indptr = np.zeros(self._n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(degree)
        indices = np.array([j for row in neighbors for j in sorted(row)], dtype=np.int64)
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self._indptr = indptr
        self._indices = indices
        self._edge_lookup = frozenset(self._edges)

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        """Edge count"""
        return len(self._edges)

    @property
    def edges(self):
        return self._edges

    @property
    def degree(self):
        return self._degree

    @property
    def indptr(self):
        return self._indptr

    @property
    def indices(self):
        return self._indices

    def neighbors(self, i):
        """Ascending neighbors of node i"""
        return self._indices[self._indptr[i]:self._indptr[i + 1]]

    def has_edge(self, i, j):
        if i > j:
            i, j = j, i
        return (i, j) in self._edge_lookup

    @property
    def fingerprint(self):
        """Short sha256 hex digest of the canonical edge-list text"""
        return hashlib.sha256(format_edge_list(self).encode('ascii')).hexdigest()[:16]

    def to_networkx(self):
        """networkx.Graph with nodes and edges inserted in ascending order"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self._edges)
        return graph

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return 'Graph(n=' + str(self._n) + ', m=' + str(self.m) + ')'


def build_graph(n, edge_list):
    """Validate an edge list and build a Graph

    Parameters
    ----------
    n : int
        Node count
    edge_list : iterable of (int, int)
        Unordered node pairs with endpoints in 0..n-1

    Returns
    -------
    Graph

    Raises
    ------
    EmptyGraphError
        If n < 2 or there are no edges
    NodeIndexError
        If an endpoint lies outside 0..n-1
    SelfLoopError
        If an edge joins a node to itself
    DuplicateEdgeError
        If an unordered pair occurs twice
    DisconnectedGraphError
        If some node is unreachable from node 0

    Examples
    --------
    >>> g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    >>> g.degree.tolist()
    [3, 2, 3, 2]
    """
    n = int(n)
    edges = [(int(i), int(j)) for i, j in edge_list]
    if n < 2 or not edges:
        raise EmptyGraphError("graph needs at least two nodes and one edge, got n=" + str(n) +
                              " with " + str(len(edges)) + " edges")
    seen = set()
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise NodeIndexError("edge (" + str(i) + ", " + str(j) + ") has an endpoint outside 0.." +
                                 str(n - 1))
        if i == j:
            raise SelfLoopError("self-loop at node " + str(i))
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdgeError("duplicate edge " + str(key))
        seen.add(key)
    graph = Graph(n, seen)
    if not nx.is_connected(graph.to_networkx()):
        raise DisconnectedGraphError("graph with " + str(n) + " nodes is not connected")
    return graph


def parse_edge_list(text):
    """Parse edge-list text into a Graph

    The first non-comment line holds n; every further non-empty line holds one
    whitespace-separated pair "i j". Lines starting with '#' are ignored.

    Parameters
    ----------
    text : str or iterable of str

    Returns
    -------
    Graph

    Raises
    ------
    EdgeListFormatError
        On a malformed line, with its line number
    NodeIndexError
        If an endpoint lies outside 0..n-1
    GraphError
        Anything `build_graph` rejects

    Examples
    --------
    >>> parse_edge_list("2\\n0 1").edges
    ((0, 1),)
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n = None
    pairs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListFormatError("expected node count, got " + repr(line), lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListFormatError("node count is not an integer: " + repr(line), lineno)
            continue
        if len(fields) != 2:
            raise EdgeListFormatError("expected 'i j', got " + repr(line), lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListFormatError("node indices must be integers: " + repr(line), lineno)
        if not (0 <= i < n and 0 <= j < n):
            raise NodeIndexError("line " + str(lineno) + ": node index out of range 0.." +
                                 str(n - 1) + ": " + repr(line))
        pairs.append((i, j))
    if n is None:
        raise EdgeListFormatError("missing node count line")
    _log.debug("parsed edge list with n=%d and %d pairs", n, len(pairs))
    return build_graph(n, pairs)


def read_edge_list(path):
    """Read and parse an edge-list file. OSError propagates unchanged."""
    with open(path, 'r') as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g):
    """Canonical edge-list text for a graph; `parse_edge_list` inverts it"""
    lines = [str(g.n)] + [str(i) + ' ' + str(j) for i, j in g.edges]
    return '\n'.join(lines) + '\n'


def is_complete(g):
    return g.m == g.n * (g.n - 1) // 2


def is_cycle(g):
    """Connected, n >= 3, every degree 2"""
    return g.n >= 3 and g.m == g.n and bool(np.all(g.degree == 2))


def is_path(g):
    """Connected, n - 1 edges, two degree-1 endpoints and the rest degree 2"""
    if g.m != g.n - 1:
        return False
    ends = int(np.sum(g.degree == 1))
    return ends == 2 and bool(np.all(g.degree <= 2))


def is_bipartite(g):
    return nx.is_bipartite(g.to_networkx())
