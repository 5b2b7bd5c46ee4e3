"""Standard graph families: complete, cycle, path and Erdos-Renyi"""

import logging

import networkx as nx

from walkpy.constants import ER_RETRY_BUDGET
from walkpy.errors import ConnectivityError, GraphError
from walkpy.graphs.graph import Graph

_log = logging.getLogger(__name__)

KINDS = ['complete', 'cycle', 'path', 'erdos_renyi']


def _from_networkx(graph):
    edges = [(min(i, j), max(i, j)) for i, j in graph.edges()]
    return Graph(graph.number_of_nodes(), edges)


def generate_graph(kind, n, p=None, seed=None, retry_budget=ER_RETRY_BUDGET):
    """Generate a member of a standard graph family

    Parameters
    ----------
    kind : str
        One of 'complete', 'cycle', 'path', 'erdos_renyi'
    n : int
        Node count, at least 2
    p : float, optional
        Edge probability in (0, 1]; required for 'erdos_renyi'
    seed : int, optional
        Seed for 'erdos_renyi'. Disconnected draws are rejected and redrawn with
        seed + 1, seed + 2, ... Default 0.
    retry_budget : int, optional
        Maximum number of 'erdos_renyi' draws

    Returns
    -------
    Graph

    Raises
    ------
    ValueError
        If 'kind' is unknown, n < 2, or p is outside (0, 1]
    ConnectivityError
        If no connected Erdos-Renyi sample is drawn within the retry budget

    Examples
    --------
    >>> generate_graph('complete', 5).m
    10
    >>> generate_graph('cycle', 12).degree.tolist() == [2] * 12
    True
    """
    if kind not in KINDS:
        raise ValueError("'kind' arg must be member of " + str(KINDS))
    n = int(n)
    if n < 2:
        raise GraphError("'n' arg must be at least 2, got " + str(n))
    if kind == 'complete':
        return _from_networkx(nx.complete_graph(n))
    if kind == 'path':
        return _from_networkx(nx.path_graph(n))
    if kind == 'cycle':
        if n < 3:
            # C_2 would need a duplicate edge; the 2-node cycle is the single edge K_2
            return _from_networkx(nx.path_graph(n))
        return _from_networkx(nx.cycle_graph(n))

    if p is None or not 0 < p <= 1:
        raise GraphError("'p' arg must lie in (0, 1] for erdos_renyi, got " + str(p))
    seed = 0 if seed is None else int(seed)
    for attempt in range(retry_budget):
        graph = nx.gnp_random_graph(n, p, seed=seed + attempt)
        if nx.is_connected(graph):
            _log.debug("erdos_renyi(n=%d, p=%g) connected at seed %d after %d redraws",
                       n, p, seed + attempt, attempt)
            return _from_networkx(graph)
    raise ConnectivityError("no connected erdos_renyi(n=" + str(n) + ", p=" + str(p) +
                            ") sample within " + str(retry_budget) + " draws from seed " +
                            str(seed))
