"""Closed-form cover-time distributions for complete graphs, cycles and paths"""

import logging

import numpy as np
from scipy.special import comb

from walkpy.errors import GraphKindError
from walkpy.graphs import is_cycle, is_path
from walkpy.chains.absorbing import _check_horizon, hitting_cdf, union_hitting_batch
from walkpy.chains.series import DistributionSeries, PmfSeries

_log = logging.getLogger(__name__)

# Once the absolute sum of the terms drops below this, float evaluation is exact to ~1e-15
FLOAT_SAFE_MAGNITUDE = 4.0


def alternating_power_sum(coefficients, bases, denominator, first_exponent, count):
    """Evaluate sum_k c_k (b_k / d)**e for e = first_exponent .. first_exponent + count - 1

    The terms alternate in sign and are huge for small e, so the sum is
    carried in exact integer arithmetic until the absolute term total falls
    below FLOAT_SAFE_MAGNITUDE, and in floats from there on.

    Parameters
    ----------
    coefficients : list of int
    bases : list of int
        Non-negative, at most `denominator`
    denominator : int
    first_exponent : int
    count : int

    Returns
    -------
    ndarray, shape (count,)
    """
    values = np.empty(count)
    ratios = np.array(bases, dtype=float) / denominator
    scaled = np.array(coefficients, dtype=float)
    powers = [b ** first_exponent for b in bases]
    scale = denominator ** first_exponent
    exponent = first_exponent
    for idx in range(count):
        if np.sum(np.abs(scaled) * ratios ** exponent) <= FLOAT_SAFE_MAGNITUDE:
            exponents = np.arange(exponent, first_exponent + count, dtype=float)
            tail = np.zeros(exponents.size)
            for c, r in zip(scaled, ratios):
                tail += c * r ** exponents
            values[idx:] = tail
            _log.debug("alternating sum switched to floats at exponent %d", exponent)
            return values
        values[idx] = sum(c * p for c, p in zip(coefficients, powers)) / scale
        powers = [p * b for p, b in zip(powers, bases)]
        scale *= denominator
        exponent += 1
    return values


def _complete_terms(n):
    gammas = range(1, n)
    bases = [n - 1 - g for g in gammas]
    signs = [1 if g % 2 == 1 else -1 for g in gammas]
    return gammas, bases, signs


def _check_complete_n(n):
    n = int(n)
    if n < 2:
        raise GraphKindError("complete graph needs n >= 2, got " + str(n))
    return n


def cover_cdf_complete(n, horizon):
    """Cover-time CDF of the complete graph K_n from any start

    F(t) = 1 - sum_{g=1}^{n-1} (-1)**(g-1) C(n-1, g) ((n-1-g) / (n-1))**t

    Parameters
    ----------
    n : int
    horizon : int

    Returns
    -------
    DistributionSeries
        kind 'cover', method 'closed-complete'

    Examples
    --------
    >>> cover_cdf_complete(3, 3).cdf.tolist()
    [0.0, 0.5, 0.75]
    """
    n = _check_complete_n(n)
    horizon = int(horizon)
    if horizon < 1:
        raise ValueError("'horizon' arg must be at least 1, got " + str(horizon))
    gammas, bases, signs = _complete_terms(n)
    coefficients = [s * int(comb(n - 1, g, exact=True)) for s, g in zip(signs, gammas)]
    survival = alternating_power_sum(coefficients, bases, n - 1, 1, horizon)
    return DistributionSeries(1.0 - survival, 'cover', method='closed-complete', check=False,
                              meta={'n': n})


def cover_pmf_complete(n, horizon):
    """Cover-time PMF of the complete graph K_n

    p(t) = sum_{g=1}^{n-1} (-1)**(g-1) Gamma(n-1) / (Gamma(g) Gamma(n-g)) ((n-1-g) / (n-1))**(t-1)

    The Gamma ratio is the integer C(n-2, g-1). p(1) is 1 for n = 2 and 0 otherwise.

    Returns
    -------
    PmfSeries
        kind 'cover'
    """
    n = _check_complete_n(n)
    horizon = int(horizon)
    if horizon < 1:
        raise ValueError("'horizon' arg must be at least 1, got " + str(horizon))
    gammas, bases, signs = _complete_terms(n)
    coefficients = [s * int(comb(n - 2, g - 1, exact=True)) for s, g in zip(signs, gammas)]
    pmf = alternating_power_sum(coefficients, bases, n - 1, 0, horizon)
    return PmfSeries(pmf, kind='cover', check=False)


def cycle_order(g, z):
    """Nodes of a cycle graph in walking order from z, z excluded, smaller neighbour first"""
    order = []
    previous, current = z, int(min(g.neighbors(z)))
    while current != z:
        order.append(int(current))
        following = [v for v in g.neighbors(current) if v != previous]
        previous, current = current, following[0]
    return order


def cover_cdf_cycle(m, z, horizon=None):
    """Cover-time CDF of a cycle from z

    With x_2..x_n the other nodes in cycle order, covering fails exactly when
    some x_i is missed, and the missed nodes form an arc. Hence

        F(t) = sum_i P(hit x_i) - sum_i P(hit x_i or x_{i+1})

    with both sums over consecutive positions, n - 1 and n - 2 terms.

    Raises
    ------
    GraphKindError
        If the graph is not a cycle
    """
    if not is_cycle(m.graph):
        raise GraphKindError("closed-form cycle cover CDF needs a cycle graph, got " + repr(m.graph))
    z = m.check_node(z, 'z')
    horizon = _check_horizon(m, horizon)
    order = cycle_order(m.graph, z)
    sets = [[x] for x in order] + [[a, b] for a, b in zip(order, order[1:])]
    history = union_hitting_batch(m, z, sets, horizon)
    singles, pairs = history[:len(order)], history[len(order):]
    cdf = singles.sum(axis=0) - pairs.sum(axis=0)
    return DistributionSeries(cdf, 'cover', method='closed-cycle', check=False,
                              meta={'start': z, 'propagations': len(sets)})


def path_ends(g):
    ends = [v for v in range(g.n) if g.degree[v] == 1]
    return ends[0], ends[-1]


def cover_cdf_path(m, z, horizon=None):
    """Cover-time CDF of a path from z

    The walk covers the path once it has reached both ends, so

        F(t) = P(hit first) + P(hit last) - P(hit first or last)

    From an end, this is the hitting CDF of the opposite end.

    Raises
    ------
    GraphKindError
        If the graph is not a path
    """
    if not is_path(m.graph):
        raise GraphKindError("closed-form path cover CDF needs a path graph, got " + repr(m.graph))
    z = m.check_node(z, 'z')
    horizon = _check_horizon(m, horizon)
    first, last = path_ends(m.graph)
    if z in (first, last):
        other = last if z == first else first
        cdf = hitting_cdf(m, z, other, horizon).cdf
        propagations = 1
    else:
        history = union_hitting_batch(m, z, [[first], [last], [first, last]], horizon)
        cdf = history[0] + history[1] - history[2]
        propagations = 3
    return DistributionSeries(cdf, 'cover', method='closed-path', check=False,
                              meta={'start': z, 'propagations': propagations})
