"""Commute time i -> j -> i, by a doubled absorbing chain and by PMF convolution"""

import logging

import numpy as np

from walkpy.errors import TargetError
from walkpy.chains.absorbing import hitting_cdf, _check_horizon
from walkpy.chains.series import DistributionSeries, PmfSeries

_log = logging.getLogger(__name__)


class CommuteChain(object):
    """2n-state chain: the original walk until j, one bridge step to the copy j',
    then the copied walk until the absorbing copy i'

    Block structure::

        C = [[D*_j, O_j],
             [O,    D_i]]

    D*_j is M with row j zeroed, O_j holds a single 1 at (j, n + j) and D_i is M
    with row i replaced by e_i. States n..2n-1 are the copy.

    Attributes
    ----------
    base : TransitionMatrix
    i, j : int
    n : int
        Dimension of the base chain; the commute chain has 2n states
    """

    def __init__(self, base, i, j):
        self.base = base
        self.i = i
        self.j = j
        self.n = base.n
        self._free_j = np.ones(self.n)
        self._free_j[j] = 0.0
        self._free_i = np.ones(self.n)
        self._free_i[i] = 0.0

    @property
    def matrix(self):
        """Dense 2n x 2n transition matrix"""
        n, i, j = self.n, self.i, self.j
        entries = self.base.entries
        chain = np.zeros((2 * n, 2 * n))
        chain[:n, :n] = self._free_j[:, None] * entries
        chain[j, n + j] = 1.0
        chain[n:, n:] = self._free_i[:, None] * entries
        chain[n + i, n + i] = 1.0
        return chain

    def step(self, occupancy):
        """One step of a length-2n occupancy vector"""
        n = self.n
        original, copy = occupancy[:n], occupancy[n:]
        after = np.empty(2 * n)
        after[:n] = self.base.step(original * self._free_j)
        after[n:] = self.base.step(copy * self._free_i)
        after[n + self.i] += copy[self.i]
        after[n + self.j] += original[self.j]
        return after

    def iter_occupancy(self, start, steps):
        occupancy = np.zeros(2 * self.n)
        occupancy[start] = 1.0
        for _ in range(steps):
            occupancy = self.step(occupancy)
            yield occupancy

    def __repr__(self):
        return 'CommuteChain(n=' + str(self.n) + ', i=' + str(self.i) + ', j=' + str(self.j) + ')'


def _check_pair(m, i, j):
    i = m.check_node(i, 'i')
    j = m.check_node(j, 'j')
    if i == j:
        raise TargetError("'i' and 'j' args must differ, both are " + str(i))
    return i, j


def commute_chain(m, i, j):
    """Build the doubled commute chain for the round trip i -> j -> i

    Parameters
    ----------
    m : TransitionMatrix
    i, j : int

    Returns
    -------
    CommuteChain

    Raises
    ------
    TargetError
        If i == j
    """
    i, j = _check_pair(m, i, j)
    return CommuteChain(m, i, j)


def commute_chain_occupancy(m, i, j, horizon=None):
    """Chain entry c^t_{i, n+i} for t = 1..horizon

    The bridge j -> j' consumes one step, so c^t is the probability that the
    commute time is at most t - 1.

    Returns
    -------
    ndarray, shape (horizon,)
    """
    i, j = _check_pair(m, i, j)
    horizon = _check_horizon(m, horizon)
    chain = CommuteChain(m, i, j)
    return np.array([occupancy[m.n + i] for occupancy in chain.iter_occupancy(i, horizon)])


def commute_cdf(m, i, j, horizon=None):
    """CDF of the commute time kappa_ij = h_ij + h_ji

    F(t) = c^{t+1}_{i, n+i}: the chain is run horizon + 1 steps and shifted by
    the bridge step.

    Parameters
    ----------
    m : TransitionMatrix
    i, j : int
    horizon : int, optional

    Returns
    -------
    DistributionSeries
        kind 'commute'

    Raises
    ------
    TargetError
        If i == j

    Examples
    --------
    >>> from walkpy.graphs import generate_graph, transition_matrix
    >>> m = transition_matrix(generate_graph('complete', 2))
    >>> commute_cdf(m, 0, 1, horizon=3).cdf.tolist()
    [0.0, 1.0, 1.0]
    """
    i, j = _check_pair(m, i, j)
    horizon = _check_horizon(m, horizon)
    occupancy = commute_chain_occupancy(m, i, j, horizon + 1)
    return DistributionSeries(occupancy[1:], 'commute', method='chain', meta={'i': i, 'j': j})


def commute_pmf_convolution(m, i, j, horizon=None):
    """PMF of the commute time as the convolution of the two hitting PMFs

    p(t) = sum_{tau=1}^{t-1} p_{h_ij}(tau) p_{h_ji}(t - tau)

    Parameters
    ----------
    m : TransitionMatrix
    i, j : int
    horizon : int, optional

    Returns
    -------
    PmfSeries
        kind 'commute'

    Raises
    ------
    TargetError
        If i == j
    """
    i, j = _check_pair(m, i, j)
    horizon = _check_horizon(m, horizon)
    pmf = np.zeros(horizon)
    if horizon >= 2:
        there = hitting_cdf(m, i, j, horizon - 1).pmf().pmf
        back = hitting_cdf(m, j, i, horizon - 1).pmf().pmf
        # index k of the full convolution is t = k + 2
        pmf[1:] = np.convolve(there, back)[:horizon - 1]
    _log.debug("commute convolution %d -> %d -> %d over %d steps", i, j, i, horizon)
    return PmfSeries(pmf, kind='commute')
