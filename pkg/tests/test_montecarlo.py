import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from walkpy.errors import SimulationError, NodeIndexError, HorizonMismatchError
from walkpy.graphs import generate_graph, transition_matrix
from walkpy.chains import DistributionSeries, hitting_cdf
from walkpy.cover import cover_cdf_exact
from walkpy.montecarlo import SimulationConfig, StoppingRule, StoppingTimes, simulate_walk_until,\
    EmpiricalCdf, empirical_cdf, dkw_band


def test_dkw_values():
    assert dkw_band(100000, 0.99) == pytest.approx(0.0051471, abs=1e-6)
    assert dkw_band(2, 0.5) == pytest.approx(math.sqrt(math.log(4) / 4))
    assert dkw_band(400, 0.9) == pytest.approx(dkw_band(100, 0.9) / 2)


@pytest.mark.parametrize('confidence', [0.0, 1.0, -0.2, 1.5])
def test_dkw_rejects_confidence(confidence):
    with pytest.raises(ValueError):
        dkw_band(100, confidence)


def test_empirical_counts():
    assert empirical_cdf([1, 1, 2, 3], 3).values.tolist() == [0.5, 0.75, 1.0]


def test_empirical_all_censored():
    cdf = empirical_cdf([-1, -1, -1], 5)
    assert cdf.values.tolist() == [0.0] * 5
    assert cdf.censored == 3


def test_empirical_censored_mass_never_arrives():
    cdf = empirical_cdf([1, -1, 2, -1], 4)
    assert cdf.values[-1] == pytest.approx((4 - 2) / 4)


def test_empirical_rejects_empty():
    with pytest.raises(SimulationError):
        empirical_cdf([], 3)


def test_empirical_band_and_distance():
    cdf = empirical_cdf([1, 2, 2, 3], 3)
    low, high = cdf.band(0.5)
    eps = dkw_band(4, 0.5)
    assert_allclose(low, np.clip(cdf.values - eps, 0, 1))
    assert_allclose(high, np.clip(cdf.values + eps, 0, 1))
    reference = DistributionSeries([0.25, 0.75, 1.0], 'hitting')
    assert cdf.sup_distance(reference) == 0.0
    with pytest.raises(HorizonMismatchError):
        cdf.sup_distance(DistributionSeries([0.25, 0.75], 'hitting'))


def test_to_series():
    series = empirical_cdf([1, 2, -1, 2], 3).to_series('cover')
    assert series.method == 'monte-carlo'
    assert series.meta['trials'] == 4
    assert series.meta['censored'] == 1


@pytest.mark.parametrize('kwargs', [{'trials': 0}, {'step_cap': 0}, {'seed': -1}, {'batch_size': 0},
                                    {'trials': 2.5}])
def test_config_rejects(kwargs):
    with pytest.raises(SimulationError):
        SimulationConfig(**kwargs)


def test_rules():
    assert StoppingRule.hit_all([3, 1, 3]).targets == (1, 3)
    assert StoppingRule.commute(0, 2) == StoppingRule('commute', (0, 2))
    with pytest.raises(SimulationError):
        StoppingRule.commute(1, 1)
    with pytest.raises(SimulationError):
        StoppingRule.hit_all([])
    with pytest.raises(SimulationError):
        StoppingRule('teleport')


def test_rule_checks(four_node):
    config = SimulationConfig(trials=10)
    with pytest.raises(SimulationError):
        simulate_walk_until(four_node, 2, StoppingRule.hit_target(2), config)
    with pytest.raises(SimulationError):
        simulate_walk_until(four_node, 1, StoppingRule.commute(0, 3), config)
    with pytest.raises(NodeIndexError):
        simulate_walk_until(four_node, 0, StoppingRule.hit_target(7), config)


def test_edge_hits_in_one_step():
    g = generate_graph('complete', 2)
    sample = simulate_walk_until(g, 0, StoppingRule.hit_target(1), SimulationConfig(trials=100))
    assert isinstance(sample, StoppingTimes)
    assert sample.times.tolist() == [1] * 100
    assert sample.censored_count == 0


def test_edge_commute_takes_two_steps():
    g = generate_graph('complete', 2)
    sample = simulate_walk_until(g, 0, StoppingRule.commute(0, 1), SimulationConfig(trials=50))
    assert set(sample.times.tolist()) == {2}


def test_reproducible(four_node):
    config = SimulationConfig(trials=20000, seed=11, batch_size=4096)
    a = simulate_walk_until(four_node, 0, StoppingRule.cover_all(), config)
    b = simulate_walk_until(four_node, 0, StoppingRule.cover_all(), config)
    assert np.array_equal(a.times, b.times)
    c = simulate_walk_until(four_node, 0, StoppingRule.cover_all(), SimulationConfig(trials=20000, seed=12))
    assert not np.array_equal(a.times, c.times)


def test_censoring_and_step_cap(four_node):
    rule = StoppingRule.cover_all()
    short = simulate_walk_until(four_node, 0, rule, SimulationConfig(trials=5000, seed=3, step_cap=3))
    long = simulate_walk_until(four_node, 0, rule, SimulationConfig(trials=5000, seed=3, step_cap=50))
    assert short.censored_count > 0
    assert np.all(short.times <= 3)
    horizon = 3
    assert np.all(empirical_cdf(long, horizon).values >= empirical_cdf(short, horizon).values)


def test_hitting_concordance(four_node, four_node_matrix):
    trials = 100000
    sample = simulate_walk_until(four_node, 0, StoppingRule.hit_target(3), SimulationConfig(trials=trials, seed=5))
    cdf = empirical_cdf(sample, 30)
    assert cdf.values[0] == pytest.approx(1 / 3, abs=dkw_band(trials, 0.9999))
    assert cdf.sup_distance(hitting_cdf(four_node_matrix, 0, 3, 30)) <= dkw_band(trials, 0.9999)


def test_hit_all_matches_cover_on_full_set(four_node):
    config = SimulationConfig(trials=2000, seed=9)
    cover = simulate_walk_until(four_node, 0, StoppingRule.cover_all(), config)
    hit_all = simulate_walk_until(four_node, 0, StoppingRule.hit_all([1, 2, 3]), config)
    assert np.array_equal(cover.times, hit_all.times)


def test_cover_concordance_triangle():
    g = generate_graph('complete', 3)
    trials = 100000
    sample = simulate_walk_until(g, 0, StoppingRule.cover_all(), SimulationConfig(trials=trials, seed=1))
    cdf = empirical_cdf(sample, 20)
    assert cdf.values[1] == pytest.approx(0.5, abs=dkw_band(trials, 0.9999))
    assert cdf.sup_distance(cover_cdf_exact(transition_matrix(g), 0, 20)) <= dkw_band(trials, 0.9999)


def test_cover_concordance_path_middle(path3):
    trials = 100000
    sample = simulate_walk_until(path3.graph, 1, StoppingRule.cover_all(), SimulationConfig(trials=trials, seed=2))
    assert empirical_cdf(sample, 3).values[2] == pytest.approx(0.5, abs=dkw_band(trials, 0.9999))


def test_empirical_cdf_object():
    cdf = EmpiricalCdf([0.1, 0.5], trials=10, censored=0)
    assert cdf.horizon == 2
    assert cdf.times.tolist() == [1, 2]
