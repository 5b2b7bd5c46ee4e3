"""Transition matrix of the simple random walk and its stationary behaviour"""

import functools

import numpy as np
import scipy.sparse as sp

from walkpy.constants import DENSE_LIMIT
from walkpy.errors import NodeIndexError


class TransitionMatrix(object):
    """Row-stochastic matrix M with m_ij = 1/d(i) for every edge ij

    Stored dense up to `DENSE_LIMIT` nodes and as CSR above that. Immutable.

    Attributes
    ----------
    graph : Graph
        The graph the walk runs on
    n : int
        Dimension
    sparse : bool
        True when stored as CSR
    """

    def __init__(self, graph, dense_limit=DENSE_LIMIT):
        self.graph = graph
        self.n = graph.n
        rows = np.repeat(np.arange(graph.n), graph.degree)
        values = 1.0 / graph.degree[rows]
        csr = sp.csr_matrix((values, graph.indices, graph.indptr), shape=(graph.n, graph.n))
        self.sparse = graph.n > dense_limit
        if self.sparse:
            self._matrix = csr
            self._transposed = csr.T.tocsr()
        else:
            dense = csr.toarray()
            dense.setflags(write=False)
            self._matrix = dense
            self._transposed = None

    @property
    def entries(self):
        """Dense n x n array of transition probabilities (a copy when stored sparse)"""
        if self.sparse:
            return self._matrix.toarray()
        return self._matrix

    def row(self, i):
        if self.sparse:
            return self._matrix.getrow(i).toarray().ravel()
        return self._matrix[i]

    def step(self, occupancy):
        """One propagation step, occupancy @ M, for a vector or a stack of row vectors"""
        if self.sparse:
            return np.asarray(self._transposed @ occupancy.T).T
        return occupancy @ self._matrix

    def check_node(self, i, name='node'):
        if not 0 <= int(i) < self.n:
            raise NodeIndexError("'" + name + "' arg " + str(i) + " outside 0.." + str(self.n - 1))
        return int(i)

    def __repr__(self):
        return 'TransitionMatrix(n=' + str(self.n) + (', sparse)' if self.sparse else ')')


@functools.lru_cache(maxsize=64)
def transition_matrix(g):
    """Transition matrix of the simple random walk on g

    Memoised on the graph's canonical edge list.

    Parameters
    ----------
    g : Graph

    Returns
    -------
    TransitionMatrix

    Examples
    --------
    >>> from walkpy.graphs import generate_graph
    >>> transition_matrix(generate_graph('complete', 2)).entries.tolist()
    [[0.0, 1.0], [1.0, 0.0]]
    """
    return TransitionMatrix(g)


def stationary_distribution(g):
    """Long-run occupancy d(j) / 2m

    Parameters
    ----------
    g : Graph

    Returns
    -------
    ndarray, shape (n,)
    """
    return g.degree / (2.0 * g.m)


def walk_distribution(m, start, horizon):
    """Occupancy of the unabsorbed walk, row `start` of M^t for t = 1..horizon

    Parameters
    ----------
    m : TransitionMatrix
    start : int
    horizon : int

    Returns
    -------
    ndarray, shape (horizon, n)
        Row t - 1 holds the distribution of the walker's position after t steps
    """
    start = m.check_node(start, 'start')
    if horizon < 1:
        raise ValueError("'horizon' arg must be at least 1, got " + str(horizon))
    history = np.empty((horizon, m.n))
    occupancy = np.zeros(m.n)
    occupancy[start] = 1.0
    for t in range(horizon):
        occupancy = m.step(occupancy)
        history[t] = occupancy
    return history
