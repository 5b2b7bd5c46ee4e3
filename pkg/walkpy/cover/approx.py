"""Product-form approximations of the cover-time CDF

The probability that every event E_x (node x reached by time t) occurs is
approximated from single-event and pairwise-joint probabilities only::

    P(E_1 ... E_k) ~ prod_i P(E_i) * prod_{pairs} P(E_a E_b) / (P(E_a) P(E_b))

The neighbor-pair form takes consecutive pairs of a node ordering; the
all-pairs form takes every pair and can exceed 1 when the events are nested.
"""

import logging

import networkx as nx
import numpy as np

from walkpy.errors import OrderingError
from walkpy.chains.absorbing import _check_horizon, iter_absorbed_mass
from walkpy.chains.series import DistributionSeries

_log = logging.getLogger(__name__)


class NodeOrdering(object):
    """Permutation x_1..x_{n-1} of the non-start nodes

    Parameters
    ----------
    graph : Graph
    start : int
    nodes : sequence of int
        Every node other than start, each exactly once

    Attributes
    ----------
    start : int
    nodes : tuple of int
    adjacent : tuple of bool
        adjacent[i] tells whether an edge joins nodes[i] and nodes[i + 1]

    Raises
    ------
    OrderingError
        If nodes is not a permutation of V minus {start}
    """

    def __init__(self, graph, start, nodes):
        nodes = tuple(int(x) for x in nodes)
        expected = set(range(graph.n)) - {start}
        if len(nodes) != len(expected) or set(nodes) != expected:
            raise OrderingError("'nodes' arg must list every node except start " + str(start) +
                                " exactly once, got " + str(list(nodes)))
        self.start = start
        self.nodes = nodes
        self.adjacent = tuple(graph.has_edge(a, b) for a, b in zip(nodes, nodes[1:]))

    @property
    def pairs(self):
        return list(zip(self.nodes, self.nodes[1:]))

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return 'NodeOrdering(start=' + str(self.start) + ', nodes=' + str(list(self.nodes)) + ')'


def default_ordering(g, z):
    """Depth-first preorder from z with z removed

    Consecutive nodes of a DFS preorder are joined by an edge whenever the walk
    descends, so on paths and cycles every consecutive pair is adjacent.
    Neighbours are visited in ascending order.

    Parameters
    ----------
    g : Graph
    z : int

    Returns
    -------
    NodeOrdering

    Examples
    --------
    >>> from walkpy.graphs import generate_graph
    >>> default_ordering(generate_graph('cycle', 5), 0).nodes
    (1, 2, 3, 4)
    """
    if not 0 <= z < g.n:
        raise OrderingError("start node " + str(z) + " outside 0.." + str(g.n - 1))
    preorder = [v for v in nx.dfs_preorder_nodes(g.to_networkx(), source=z) if v != z]
    return NodeOrdering(g, z, preorder)


def explicit_ordering(g, z, nodes):
    """Validate a caller-supplied ordering of the non-start nodes"""
    return NodeOrdering(g, z, nodes)


def _product_value(singles, unions, first, second):
    """Log-space evaluation of the product form at one time step

    Zero whenever a single probability or a pairwise intersection is not
    positive: some node is then unreachable by t and the cover CDF is 0.
    """
    if np.any(singles <= 0.0):
        return 0.0
    joint = singles[first] + singles[second] - unions
    if np.any(joint <= 0.0):
        return 0.0
    log_singles = np.log(singles)
    log_value = log_singles.sum() + np.sum(np.log(joint) - log_singles[first] - log_singles[second])
    with np.errstate(over='ignore'):
        return float(np.exp(log_value))


def _product_series(m, z, nodes, pairs, horizon):
    """Propagate singles then pairs together and evaluate the product per step"""
    position = {x: k for k, x in enumerate(nodes)}
    first = np.array([position[a] for a, _ in pairs], dtype=int)
    second = np.array([position[b] for _, b in pairs], dtype=int)
    masks = np.zeros((len(nodes) + len(pairs), m.n))
    masks[np.arange(len(nodes)), nodes] = 1.0
    for r, (a, b) in enumerate(pairs, start=len(nodes)):
        masks[r, [a, b]] = 1.0
    _log.debug("product form: %d propagations over %d steps", masks.shape[0], horizon)
    cdf = np.empty(horizon)
    for t, absorbed in enumerate(iter_absorbed_mass(m, z, masks, horizon)):
        cdf[t] = _product_value(absorbed[:len(nodes)], absorbed[len(nodes):], first, second)
    return cdf, masks.shape[0]


def cover_cdf_approx(m, z, horizon=None, ordering=None, clamp=False):
    """Neighbor-pair approximation of the cover-time CDF

    Runs 2(n - 1) - 1 absorbing propagations: one per non-start node and one
    per consecutive pair of the ordering. Non-adjacent consecutive pairs are
    handled like adjacent ones.

    Parameters
    ----------
    m : TransitionMatrix
    z : int
    horizon : int, optional
    ordering : NodeOrdering, optional
        Default `default_ordering(m.graph, z)`
    clamp : bool, optional
        Return the running maximum clipped to [0, 1] instead of the raw values

    Returns
    -------
    DistributionSeries
        kind 'cover', method 'approx', unchecked

    Raises
    ------
    OrderingError
        If the ordering does not belong to start z

    Examples
    --------
    >>> from walkpy.graphs import generate_graph, transition_matrix
    >>> m = transition_matrix(generate_graph('path', 3))
    >>> cover_cdf_approx(m, 0, horizon=3).cdf.round(12).tolist()
    [0.0, 0.5, 0.5]
    """
    z = m.check_node(z, 'z')
    horizon = _check_horizon(m, horizon)
    if ordering is None:
        ordering = default_ordering(m.graph, z)
    elif ordering.start != z:
        raise OrderingError("ordering starts at " + str(ordering.start) + ", not at " + str(z))
    cdf, propagations = _product_series(m, z, list(ordering.nodes), ordering.pairs, horizon)
    series = DistributionSeries(cdf, 'cover', method='approx', check=False,
                                meta={'start': z, 'propagations': propagations,
                                      'ordering': list(ordering.nodes),
                                      'adjacent': list(ordering.adjacent)})
    return series.clamped() if clamp else series


def cover_cdf_approx_all_pairs(m, z, horizon=None):
    """All-pairs product approximation of the cover-time CDF

    Same as `cover_cdf_approx` with the correction ratio taken over every pair
    i < j. Values are reported raw and may be far above 1 (or inf) when the
    events are nested, as on a path started inside.

    Returns
    -------
    DistributionSeries
        kind 'cover', method 'approx-all-pairs', unchecked
    """
    z = m.check_node(z, 'z')
    horizon = _check_horizon(m, horizon)
    nodes = [v for v in range(m.n) if v != z]
    pairs = [(a, b) for k, a in enumerate(nodes) for b in nodes[k + 1:]]
    cdf, propagations = _product_series(m, z, nodes, pairs, horizon)
    return DistributionSeries(cdf, 'cover', method='approx-all-pairs', check=False,
                              meta={'start': z, 'propagations': propagations})
