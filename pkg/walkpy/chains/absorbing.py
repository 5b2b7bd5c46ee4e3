"""Absorbing-chain propagation: hitting-time CDFs for single nodes and node sets"""

import logging

import numpy as np

from walkpy.constants import default_horizon
from walkpy.errors import TargetError
from walkpy.chains.series import DistributionSeries

_log = logging.getLogger(__name__)


class AbsorbingSystem(object):
    """Transition matrix with the rows of `absorbing` replaced by basis rows

    Mass that enters an absorbing node stays there, so the absorbed mass after
    t steps is the probability that the set was hit by time t.

    Attributes
    ----------
    base : TransitionMatrix
    absorbing : frozenset of int
    mask : ndarray, shape (n,)
        1.0 on absorbing nodes, 0.0 elsewhere
    """

    def __init__(self, base, absorbing):
        self.base = base
        self.absorbing = frozenset(absorbing)
        mask = np.zeros(base.n)
        mask[sorted(self.absorbing)] = 1.0
        mask.setflags(write=False)
        self.mask = mask
        self._free = 1.0 - mask

    @property
    def matrix(self):
        """Dense effective matrix D with D[a] = e_a for every absorbing a"""
        return self._free[:, None] * self.base.entries + np.diag(self.mask)

    def step(self, occupancy):
        return self.base.step(occupancy * self._free) + occupancy * self.mask

    def iter_occupancy(self, start, horizon):
        """Yield the occupancy vector after t = 1..horizon steps from a point mass at start"""
        occupancy = np.zeros(self.base.n)
        occupancy[start] = 1.0
        for _ in range(horizon):
            occupancy = self.step(occupancy)
            yield occupancy

    def absorbed_mass(self, start, horizon):
        """Total absorbed mass after t = 1..horizon steps, shape (horizon,)"""
        return np.array([occupancy @ self.mask for occupancy in self.iter_occupancy(start, horizon)])

    def __repr__(self):
        return 'AbsorbingSystem(n=' + str(self.base.n) + ', absorbing=' + str(sorted(self.absorbing)) + ')'


def _target_set(m, targets, name='targets'):
    nodes = set(m.check_node(x, name) for x in targets)
    if not nodes:
        raise TargetError("'" + name + "' arg must be a non-empty node set")
    return frozenset(nodes)


def _check_horizon(m, horizon):
    if horizon is None:
        return default_horizon(m.n)
    horizon = int(horizon)
    if horizon < 1:
        raise ValueError("'horizon' arg must be at least 1, got " + str(horizon))
    return horizon


def absorbing_system(m, targets):
    """Make every node of `targets` absorbing

    Parameters
    ----------
    m : TransitionMatrix
    targets : iterable of int
        Non-empty set of node indices

    Returns
    -------
    AbsorbingSystem

    Raises
    ------
    TargetError
        If the target set is empty
    NodeIndexError
        If a target lies outside 0..n-1
    """
    return AbsorbingSystem(m, _target_set(m, targets))


def iter_absorbed_mass(m, start, masks, horizon):
    """Yield absorbed mass per target set after each of t = 1..horizon steps

    All target sets are propagated together: the occupancy is a stack of row
    vectors, one per set, and step t + 1 is (V * free) @ M + V * masks.

    Parameters
    ----------
    m : TransitionMatrix
    start : int
    masks : ndarray, shape (k, n)
        Row r is the 0/1 indicator of target set r; none may contain start
    horizon : int

    Yields
    ------
    ndarray, shape (k,)
    """
    masks = np.asarray(masks, dtype=float)
    free = 1.0 - masks
    occupancy = np.zeros(masks.shape)
    occupancy[:, start] = 1.0
    for _ in range(horizon):
        occupancy = m.step(occupancy * free) + occupancy * masks
        yield np.einsum('ij,ij->i', occupancy, masks)


def union_hitting_batch(m, start, target_sets, horizon=None):
    """Union hitting CDFs of many target sets in one vectorised propagation

    Parameters
    ----------
    m : TransitionMatrix
    start : int
    target_sets : sequence of iterables of int
    horizon : int, optional

    Returns
    -------
    ndarray, shape (len(target_sets), horizon)
        Row r holds F_{S_r}(1..T)
    """
    start = m.check_node(start, 'start')
    horizon = _check_horizon(m, horizon)
    masks = np.zeros((len(target_sets), m.n))
    for r, targets in enumerate(target_sets):
        nodes = _target_set(m, targets)
        if start in nodes:
            raise TargetError("start node " + str(start) + " is inside target set " + str(sorted(nodes)))
        masks[r, sorted(nodes)] = 1.0
    _log.debug("propagating %d target sets over %d steps on n=%d", len(target_sets), horizon, m.n)
    history = np.empty((len(target_sets), horizon))
    for t, absorbed in enumerate(iter_absorbed_mass(m, start, masks, horizon)):
        history[:, t] = absorbed
    return history


def hitting_cdf(m, start, target, horizon=None):
    """CDF of the hitting time from `start` to `target`

    F(t) is the mass at `target` after t steps of the occupancy vector through
    the system in which `target` is absorbing.

    Parameters
    ----------
    m : TransitionMatrix
    start : int
    target : int
    horizon : int, optional
        Default ceil(100 n ln n)

    Returns
    -------
    DistributionSeries
        kind 'hitting'

    Raises
    ------
    TargetError
        If start == target

    Examples
    --------
    >>> from walkpy.graphs import generate_graph, transition_matrix
    >>> m = transition_matrix(generate_graph('cycle', 3))
    >>> hitting_cdf(m, 0, 1, horizon=3).cdf.tolist()
    [0.5, 0.75, 0.875]
    """
    start = m.check_node(start, 'start')
    target = m.check_node(target, 'target')
    if start == target:
        raise TargetError("'start' and 'target' args must differ, both are " + str(start))
    horizon = _check_horizon(m, horizon)
    system = AbsorbingSystem(m, [target])
    cdf = np.array([occupancy[target] for occupancy in system.iter_occupancy(start, horizon)])
    return DistributionSeries(cdf, 'hitting', method='absorbing',
                              meta={'start': start, 'target': target})


def union_hitting_cdf(m, start, targets, horizon=None):
    """CDF of the first time any node of `targets` is reached from `start`

    F(t) = sum over x in targets of the mass at x after t steps, all of `targets`
    absorbing.

    Parameters
    ----------
    m : TransitionMatrix
    start : int
    targets : iterable of int
    horizon : int, optional

    Returns
    -------
    DistributionSeries
        kind 'union-hitting'

    Raises
    ------
    TargetError
        If `targets` is empty or contains start
    """
    start = m.check_node(start, 'start')
    nodes = _target_set(m, targets)
    if start in nodes:
        raise TargetError("start node " + str(start) + " is inside target set " + str(sorted(nodes)))
    horizon = _check_horizon(m, horizon)
    system = AbsorbingSystem(m, nodes)
    cdf = system.absorbed_mass(start, horizon)
    return DistributionSeries(cdf, 'union-hitting', method='absorbing',
                              meta={'start': start, 'targets': sorted(nodes)})
