import numpy as np
import pytest
from hypothesis import strategies as st

from walkpy.graphs import build_graph, generate_graph, transition_matrix

# Four-node example: triangle 0-1-2 and triangle 0-2-3 sharing edge 0-2
FOUR_NODE_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run slow tests')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def four_node():
    return build_graph(4, FOUR_NODE_EDGES)


@pytest.fixture
def four_node_matrix(four_node):
    return transition_matrix(four_node)


@pytest.fixture
def triangle():
    return transition_matrix(generate_graph('complete', 3))


@pytest.fixture
def edge():
    return transition_matrix(generate_graph('complete', 2))


@pytest.fixture
def path3():
    return transition_matrix(generate_graph('path', 3))


def four_node_m14(t):
    """m^t_{0,3} of the four-node example"""
    return (1.0 - (-1.0) ** t * (2.0 / 3.0) ** t) / 5.0


def four_node_d14(t):
    """P(h_03 <= t) of the four-node example"""
    r = np.sqrt(13.0)
    return 1.0 - ((r - 3.0) * ((1.0 - r) / 6.0) ** t + (r + 3.0) * ((1.0 + r) / 6.0) ** t) / (2.0 * r)


def four_node_c(t):
    """Commute chain entry c^t_{0, n+0} for the round trip 0 -> 3 -> 0"""
    r3, r13 = np.sqrt(3.0), np.sqrt(13.0)
    a, b = (1.0 + r13) / 6.0, (1.0 - r13) / 6.0
    return (1.0 + (3.0 + 2.0 * r3) / 4.0 * 3.0 ** (-t / 2.0)
            + (39.0 - 26.0 * r3) / 52.0 * (-1.0) ** t * 3.0 ** (-t / 2.0)
            - (65.0 + 19.0 * r13) / 52.0 * a ** t
            + (19.0 * r13 - 65.0) / 52.0 * b ** t)


@st.composite
def connected_graphs(draw, min_nodes=2, max_nodes=8):
    """Random connected graph: a random spanning tree plus random extra edges"""
    n = draw(st.integers(min_nodes, max_nodes))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    if candidates:
        extra = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=len(candidates)))
        edges.update(extra)
    return build_graph(n, sorted(edges))
