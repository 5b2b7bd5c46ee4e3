"""Method dispatch for cover-time queries and cross-method error measures"""

import logging

import numpy as np
import pandas as pd

from walkpy.constants import EXACT_CAP_DEFAULT, EXACT_CAP_CEILING, STEP_CAP_DEFAULT, MC_TRIALS_DEFAULT,\
    DEFAULT_CONFIDENCE
from walkpy.errors import CapExceededError, GraphKindError, HorizonMismatchError
from walkpy.graphs import is_complete, is_cycle, is_path
from walkpy.chains.absorbing import _check_horizon
from walkpy.cover.exact import cover_cdf_exact
from walkpy.cover.approx import cover_cdf_approx, cover_cdf_approx_all_pairs
from walkpy.cover.closed import cover_cdf_complete, cover_cdf_cycle, cover_cdf_path
from walkpy.montecarlo import SimulationConfig, StoppingRule, simulate_walk_until, empirical_cdf, dkw_band

_log = logging.getLogger(__name__)

METHODS = ['exact', 'approx', 'approx-all-pairs', 'closed-complete', 'closed-cycle', 'closed-path',
           'monte-carlo']

_SHAPES = {'closed-complete': is_complete, 'closed-cycle': is_cycle, 'closed-path': is_path}


class CoverQuery(object):
    """Start node, horizon and method of a cover-time computation

    Parameters
    ----------
    start : int
    horizon : int, optional
        Default ceil(100 n ln n) of the graph the query runs on
    method : str, optional
        One of 'exact', 'approx', 'approx-all-pairs', 'closed-complete',
        'closed-cycle', 'closed-path', 'monte-carlo'. Default 'exact'.
    cap : int, optional
        Node cap of the exact method. Default 16.
    allow_large : bool, optional
        Permit a cap above 24
    ordering : NodeOrdering, optional
        Ordering of the neighbor-pair approximation
    clamp : bool, optional
        Clamp the approximation for plotting
    trials, seed, step_cap : int, optional
        Monte Carlo settings
    workers : int, optional
        Threads of the exact method

    Raises
    ------
    ValueError
        If the method is unknown or the cap is out of range
    """

    def __init__(self, start, horizon=None, method='exact', cap=EXACT_CAP_DEFAULT, allow_large=False,
                 ordering=None, clamp=False, trials=MC_TRIALS_DEFAULT, seed=0, step_cap=STEP_CAP_DEFAULT,
                 workers=1):
        if method not in METHODS:
            raise ValueError("'method' arg must be member of " + str(METHODS))
        if cap < 1:
            raise ValueError("'cap' arg must be at least 1, got " + str(cap))
        if cap > EXACT_CAP_CEILING and not allow_large:
            raise ValueError("'cap' arg above " + str(EXACT_CAP_CEILING) + " needs allow_large=True")
        self.start = start
        self.horizon = horizon
        self.method = method
        self.cap = cap
        self.allow_large = allow_large
        self.ordering = ordering
        self.clamp = clamp
        self.trials = trials
        self.seed = seed
        self.step_cap = step_cap
        self.workers = workers

    def check(self, g):
        """Raise if the method cannot run on g

        Raises
        ------
        CapExceededError
            Exact method on more than `cap` nodes
        GraphKindError
            Closed form on a graph of another shape
        """
        if self.method == 'exact' and g.n > self.cap:
            raise CapExceededError("exact cover CDF refused: n=" + str(g.n) + " exceeds cap " +
                                   str(self.cap) + ", use method 'approx' or 'monte-carlo'")
        if self.method in _SHAPES and not _SHAPES[self.method](g):
            raise GraphKindError("method " + repr(self.method) + " does not apply to " + repr(g))

    def __repr__(self):
        return 'CoverQuery(start=' + str(self.start) + ', method=' + repr(self.method) + ')'


def cover_cdf(m, query):
    """Cover-time CDF of the walk on m.graph by the method the query names

    Parameters
    ----------
    m : TransitionMatrix
    query : CoverQuery

    Returns
    -------
    DistributionSeries
        For 'monte-carlo', meta carries the trial and censored counts

    Examples
    --------
    >>> from walkpy.graphs import generate_graph, transition_matrix
    >>> m = transition_matrix(generate_graph('complete', 3))
    >>> cover_cdf(m, CoverQuery(0, horizon=2, method='closed-complete')).cdf.tolist()
    [0.0, 0.5]
    """
    query.check(m.graph)
    start = m.check_node(query.start, 'start')
    horizon = _check_horizon(m, query.horizon)
    method = query.method
    _log.debug("cover query %r on %r, horizon %d", query, m.graph, horizon)
    if method == 'exact':
        return cover_cdf_exact(m, start, horizon, cap=query.cap, allow_large=query.allow_large,
                               workers=query.workers)
    if method == 'approx':
        return cover_cdf_approx(m, start, horizon, ordering=query.ordering, clamp=query.clamp)
    if method == 'approx-all-pairs':
        series = cover_cdf_approx_all_pairs(m, start, horizon)
        return series.clamped() if query.clamp else series
    if method == 'closed-complete':
        series = cover_cdf_complete(m.n, horizon)
        series.meta['start'] = start
        return series
    if method == 'closed-cycle':
        return cover_cdf_cycle(m, start, horizon)
    if method == 'closed-path':
        return cover_cdf_path(m, start, horizon)
    config = SimulationConfig(trials=query.trials, seed=query.seed, step_cap=query.step_cap)
    sample = simulate_walk_until(m.graph, start, StoppingRule.cover_all(), config)
    empirical = empirical_cdf(sample, horizon)
    meta = {'start': start, 'seed': config.seed, 'rng': sample.rng, 'confidence': DEFAULT_CONFIDENCE,
            'dkw_half_width': dkw_band(empirical.trials, DEFAULT_CONFIDENCE)}
    return empirical.to_series('cover', meta=meta)


def sup_error(a, b):
    """max_t |a(t) - b(t)| of two series over the same horizon

    Raises
    ------
    HorizonMismatchError
        If the horizons differ

    Examples
    --------
    >>> from walkpy.chains import DistributionSeries
    >>> a = DistributionSeries([0.0, 0.5, 1.0], 'cover')
    >>> sup_error(a, a)
    0.0
    """
    if a.horizon != b.horizon:
        raise HorizonMismatchError("horizons " + str(a.horizon) + " and " + str(b.horizon) + " differ")
    return float(np.max(np.abs(a.cdf - b.cdf)))


def _reference(m, z, horizon, reference):
    if reference == 'exact':
        return cover_cdf_exact(m, z, horizon)
    if reference == 'path':
        return cover_cdf_path(m, z, horizon)
    if reference == 'cycle':
        return cover_cdf_cycle(m, z, horizon)
    raise ValueError("'reference' arg must be member of ['exact', 'path', 'cycle']")


def error_by_start(m, horizon=None, reference='exact', starts=None):
    """Sup error of the neighbor-pair approximation for each start node

    Parameters
    ----------
    m : TransitionMatrix
    horizon : int, optional
    reference : str, optional
        'exact', 'path' or 'cycle': the series the approximation is measured against
    starts : iterable of int, optional
        Default every node

    Returns
    -------
    pandas.DataFrame
        Columns start, sup_error, adjacent_pairs (consecutive ordering pairs
        joined by an edge), one row per start
    """
    horizon = _check_horizon(m, horizon)
    rows = []
    for z in (range(m.n) if starts is None else starts):
        approx = cover_cdf_approx(m, z, horizon)
        rows.append({'start': z,
                     'sup_error': sup_error(approx, _reference(m, z, horizon, reference)),
                     'adjacent_pairs': int(sum(approx.meta['adjacent']))})
    return pd.DataFrame(rows, columns=['start', 'sup_error', 'adjacent_pairs'])
