import numpy as np
import pytest
from numpy.testing import assert_allclose
from hypothesis import given, settings

from walkpy.errors import NodeIndexError
from walkpy.graphs import generate_graph, transition_matrix, stationary_distribution, walk_distribution, is_bipartite,\
    TransitionMatrix

from conftest import connected_graphs, four_node_m14


def test_four_node_rows(four_node_matrix):
    assert_allclose(four_node_matrix.row(0), [0, 1 / 3, 1 / 3, 1 / 3])
    assert_allclose(four_node_matrix.row(1), [0.5, 0, 0.5, 0])


@settings(deadline=None)
@given(connected_graphs())
def test_rows_are_stochastic(g):
    entries = transition_matrix(g).entries
    assert_allclose(entries.sum(axis=1), 1.0, atol=1e-12)
    assert np.all(np.diag(entries) == 0)
    for i, j in g.edges:
        assert entries[i, j] == pytest.approx(1.0 / g.degree[i])


def test_matrix_is_memoised(four_node):
    assert transition_matrix(four_node) is transition_matrix(four_node)


def test_entries_read_only(four_node_matrix):
    with pytest.raises(ValueError):
        four_node_matrix.entries[0, 0] = 1.0


def test_sparse_matches_dense():
    g = generate_graph('erdos_renyi', 40, p=0.2, seed=3)
    dense = TransitionMatrix(g)
    sparse = TransitionMatrix(g, dense_limit=10)
    assert sparse.sparse and not dense.sparse
    assert_allclose(sparse.entries, dense.entries)
    stack = np.random.default_rng(1).random((3, 40))
    assert_allclose(sparse.step(stack), dense.step(stack), atol=1e-14)
    assert_allclose(sparse.step(stack[0]), dense.step(stack[0]), atol=1e-14)
    assert_allclose(sparse.row(5), dense.row(5))


def test_check_node(four_node_matrix):
    assert four_node_matrix.check_node(3) == 3
    with pytest.raises(NodeIndexError):
        four_node_matrix.check_node(4, 'start')


def test_walk_distribution_four_node(four_node_matrix):
    history = walk_distribution(four_node_matrix, 0, 60)
    expected = [four_node_m14(t) for t in range(1, 61)]
    assert_allclose(history[:, 3], expected, atol=1e-12)
    assert_allclose(history.sum(axis=1), 1.0, atol=1e-12)


def test_walk_converges_to_stationary(four_node, four_node_matrix):
    pi = stationary_distribution(four_node)
    assert_allclose(pi, [0.3, 0.2, 0.3, 0.2])
    history = walk_distribution(four_node_matrix, 1, 200)
    assert_allclose(history[-1], pi, atol=1e-12)
    assert_allclose(pi @ four_node_matrix.entries, pi, atol=1e-14)


def test_walk_distribution_rejects_bad_horizon(four_node_matrix):
    with pytest.raises(ValueError):
        walk_distribution(four_node_matrix, 0, 0)


@settings(deadline=None, max_examples=50)
@given(connected_graphs())
def test_power_iteration_limit(g):
    m = transition_matrix(g)
    pi = stationary_distribution(g)
    history = walk_distribution(m, 0, 2000)
    if is_bipartite(g):
        # period two: the walk alternates sides, the two-step average settles
        assert_allclose(0.5 * (history[-1] + history[-2]), pi, atol=1e-8)
        assert not np.allclose(history[-1], pi, atol=1e-3)
    else:
        assert_allclose(history[-1], pi, atol=1e-8)


def test_even_cycle_needs_two_step_average():
    g = generate_graph('cycle', 6)
    history = walk_distribution(transition_matrix(g), 0, 500)
    assert is_bipartite(g)
    assert history[-1][1] == 0.0
    assert_allclose(0.5 * (history[-1] + history[-2]), stationary_distribution(g), atol=1e-12)
