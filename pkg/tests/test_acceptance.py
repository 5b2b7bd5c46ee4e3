"""End-to-end cross-checks between independent methods

Cases that take minutes are marked slow and run with --runslow.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import matplotlib
matplotlib.use('Agg')

from walkpy.graphs import generate_graph, transition_matrix
from walkpy.chains import hitting_cdf, iter_absorbed_mass
from walkpy.cover import cover_cdf_exact, cover_cdf_complete, cover_cdf_cycle, cover_cdf_path,\
    cover_cdf_approx, cover_cdf_approx_all_pairs, sup_error, subset_masks
from walkpy.montecarlo import SimulationConfig, StoppingRule, simulate_walk_until, empirical_cdf, dkw_band
from walkpy.plotting import plot_series

from conftest import connected_graphs

# Frozen seeds of the Monte Carlo concordance runs
ER_SEED = 7
MC_SEED = 20


@pytest.mark.parametrize('n', range(3, 11))
def test_complete_closed_form_against_exact(n):
    m = transition_matrix(generate_graph('complete', n))
    horizon = 200 * n
    assert sup_error(cover_cdf_exact(m, 0, horizon), cover_cdf_complete(n, horizon)) < 1e-10


@pytest.mark.parametrize('n', range(3, 13))
def test_cycle_closed_form_against_exact(n):
    m = transition_matrix(generate_graph('cycle', n))
    horizon = 200 * n
    z = n // 2
    assert sup_error(cover_cdf_exact(m, z, horizon), cover_cdf_cycle(m, z, horizon)) < 1e-10


@pytest.mark.parametrize('n', range(3, 11))
def test_path_closed_form_against_exact_every_start(n):
    m = transition_matrix(generate_graph('path', n))
    horizon = 200 * n
    for z in range(n):
        assert sup_error(cover_cdf_exact(m, z, horizon), cover_cdf_path(m, z, horizon)) < 1e-10


@pytest.mark.slow
@pytest.mark.parametrize('n', [11, 12])
def test_path_closed_form_against_exact_long(n):
    m = transition_matrix(generate_graph('path', n))
    horizon = 200 * n
    for z in range(n):
        assert sup_error(cover_cdf_exact(m, z, horizon), cover_cdf_path(m, z, horizon)) < 1e-10


@pytest.mark.parametrize('n', [5, 20, 50])
def test_approx_reduces_to_path_closed_form(n):
    m = transition_matrix(generate_graph('path', n))
    horizon = 4 * n * n
    for z in (0, n - 1):
        assert sup_error(cover_cdf_approx(m, z, horizon), cover_cdf_path(m, z, horizon)) < 1e-12


@pytest.mark.slow
def test_approx_reduces_to_path_closed_form_long():
    m = transition_matrix(generate_graph('path', 200))
    horizon = 5000
    assert sup_error(cover_cdf_approx(m, 0, horizon), cover_cdf_path(m, 0, horizon)) < 1e-12


def test_all_pairs_overshoot_and_neighbor_pairs_bounded():
    m = transition_matrix(generate_graph('path', 6))
    horizon = 300
    exact = cover_cdf_exact(m, 0, horizon)
    all_pairs = cover_cdf_approx_all_pairs(m, 0, horizon)
    assert np.any(all_pairs.cdf > exact.cdf + 1e-6)
    for z in range(6):
        assert cover_cdf_approx(m, z, horizon).cdf.max() <= 1 + 1e-9


def test_triangle_pmf_oracle():
    # walks 0 -> a -> b with b != 0 and b != a: first step free, second step 1/2
    m = transition_matrix(generate_graph('complete', 3))
    pmf = cover_cdf_exact(m, 0, 2).pmf()
    assert pmf.value(1) == 0.0
    assert pmf.value(2) == pytest.approx(0.5)


@pytest.mark.slow
@settings(deadline=None, max_examples=200)
@given(connected_graphs(max_nodes=12), st.data())
def test_exact_property_suite(g, data):
    z = data.draw(st.integers(0, g.n - 1))
    m = transition_matrix(g)
    horizon = 20 * g.n
    series = cover_cdf_exact(m, z, horizon)
    assert series.meta['subsets'] == 2 ** (g.n - 1) - 1
    assert series.cdf.min() >= -1e-9
    assert series.cdf.max() <= 1 + 1e-9
    assert series.is_monotone(1e-12)
    others = [x for x in range(g.n) if x != z]
    masks, _ = subset_masks(others, g.n, 1, min(2 ** len(others), 64))
    previous = np.zeros(len(masks))
    for absorbed in iter_absorbed_mass(m, z, masks, horizon):
        assert np.all(absorbed >= previous - 1e-12)
        previous = absorbed


def test_erdos_renyi_monte_carlo_against_approx():
    g = generate_graph('erdos_renyi', 20, p=0.3, seed=ER_SEED)
    m = transition_matrix(g)
    horizon = 2000
    trials = 100000
    sample = simulate_walk_until(g, 0, StoppingRule.cover_all(), SimulationConfig(trials=trials, seed=MC_SEED))
    empirical = empirical_cdf(sample, horizon)
    approx = cover_cdf_approx(m, 0, horizon)
    assert sample.censored_count == 0
    assert empirical.values[-1] > 0.99
    # observed sup distance 0.0282 with these seeds, about 5.5 DKW half-widths at 0.99
    assert empirical.sup_distance(approx) <= 0.03


def test_small_erdos_renyi_monte_carlo_against_exact():
    g = generate_graph('erdos_renyi', 10, p=0.4, seed=ER_SEED)
    m = transition_matrix(g)
    horizon = 300
    trials = 100000
    exact = cover_cdf_exact(m, 0, horizon)
    sample = simulate_walk_until(g, 0, StoppingRule.cover_all(), SimulationConfig(trials=trials, seed=MC_SEED))
    assert empirical_cdf(sample, horizon).sup_distance(exact) <= dkw_band(trials, 0.9999)


@pytest.mark.slow
def test_erdos_renyi_monte_carlo_against_exact():
    g = generate_graph('erdos_renyi', 20, p=0.3, seed=ER_SEED)
    m = transition_matrix(g)
    horizon = 300
    trials = 100000
    exact = cover_cdf_exact(m, 0, horizon, cap=20, workers=4)
    sample = simulate_walk_until(g, 0, StoppingRule.cover_all(), SimulationConfig(trials=trials, seed=MC_SEED))
    assert empirical_cdf(sample, horizon).sup_distance(exact) <= dkw_band(trials, 0.9999)


def test_hitting_oracle_on_cycle():
    g = generate_graph('cycle', 8)
    trials = 100000
    sample = simulate_walk_until(g, 0, StoppingRule.hit_target(4), SimulationConfig(trials=trials, seed=MC_SEED))
    reference = hitting_cdf(transition_matrix(g), 0, 4, 200)
    assert empirical_cdf(sample, 200).sup_distance(reference) <= dkw_band(trials, 0.9999)


def test_plot_series():
    m = transition_matrix(generate_graph('path', 5))
    series = [cover_cdf_exact(m, 2, 60), cover_cdf_approx(m, 2, 60)]
    ax = plot_series(series)
    assert len(ax.get_lines()) == 2
    assert [text.get_text() for text in ax.get_legend().get_texts()] == ['exact', 'approx']
    ax = plot_series([series[0], cover_cdf_path(m, 2, 60)], labels=['a', 'b'], what='pmf')
    assert ax.get_ylabel() == 'p(t)'
    with pytest.raises(ValueError):
        plot_series(series, what='survival')
    with pytest.raises(ValueError):
        plot_series(series, labels=['a'])


@pytest.mark.parametrize('z', [2, 3])
def test_all_pairs_from_path_middle_stays_below_exact(z):
    # largest observed excess of all-pairs over exact from the middle of P6 is 3.3e-16
    m = transition_matrix(generate_graph('path', 6))
    exact = cover_cdf_exact(m, z, 300)
    all_pairs = cover_cdf_approx_all_pairs(m, z, 300)
    assert np.max(all_pairs.cdf - exact.cdf) <= 1e-12
