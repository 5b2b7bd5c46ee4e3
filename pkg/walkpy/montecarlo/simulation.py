"""Vectorised simulation of random walks until a stopping event"""

import logging

import numpy as np

from walkpy.constants import STEP_CAP_DEFAULT, MC_BATCH_SIZE, MC_TRIALS_DEFAULT, RNG_ALGORITHM
from walkpy.errors import SimulationError, NodeIndexError

_log = logging.getLogger(__name__)

RULE_KINDS = ['hit-target', 'hit-all', 'cover-all', 'commute']


def _positive_int(value, name):
    if int(value) != value or value < 1:
        raise SimulationError("'" + name + "' arg must be a positive integer, got " + repr(value))
    return int(value)


class SimulationConfig(object):
    """Trial count, seed and limits of a simulation run

    Parameters
    ----------
    trials : int, optional
        Default 100000
    seed : int, optional
        Non-negative. Batch b draws from PCG64(SeedSequence(seed, spawn_key=(b,))).
    step_cap : int, optional
        Trials still running after this many steps are censored. Default 10**6.
    batch_size : int, optional
        Trials walked together. Changing it changes the streams, so it is part
        of the reproducibility key.

    Raises
    ------
    SimulationError
        If a count is not a positive integer or the seed is negative
    """

    def __init__(self, trials=MC_TRIALS_DEFAULT, seed=0, step_cap=STEP_CAP_DEFAULT, batch_size=MC_BATCH_SIZE):
        self.trials = _positive_int(trials, 'trials')
        self.step_cap = _positive_int(step_cap, 'step_cap')
        self.batch_size = _positive_int(batch_size, 'batch_size')
        if int(seed) != seed or seed < 0:
            raise SimulationError("'seed' arg must be a non-negative integer, got " + repr(seed))
        self.seed = int(seed)

    def generator(self, batch):
        """numpy Generator for batch number `batch`"""
        sequence = np.random.SeedSequence(self.seed, spawn_key=(batch,))
        return np.random.Generator(np.random.PCG64(sequence))

    def __repr__(self):
        return ('SimulationConfig(trials=' + str(self.trials) + ', seed=' + str(self.seed) +
                ', step_cap=' + str(self.step_cap) + ')')


class StoppingRule(object):
    """Event that ends a trial

    Build with the class methods `hit_target`, `hit_all`, `cover_all` and
    `commute`.

    Attributes
    ----------
    kind : str
        One of 'hit-target', 'hit-all', 'cover-all', 'commute'
    targets : tuple of int
        The target, the target set, () for cover, or (i, j) for commute
    """

    def __init__(self, kind, targets=()):
        if kind not in RULE_KINDS:
            raise SimulationError("'kind' arg must be member of " + str(RULE_KINDS))
        self.kind = kind
        self.targets = tuple(int(x) for x in targets)

    @classmethod
    def hit_target(cls, target):
        return cls('hit-target', (target,))

    @classmethod
    def hit_all(cls, targets):
        targets = sorted(set(targets))
        if not targets:
            raise SimulationError("'targets' arg must be a non-empty node set")
        return cls('hit-all', targets)

    @classmethod
    def cover_all(cls):
        return cls('cover-all')

    @classmethod
    def commute(cls, i, j):
        if i == j:
            raise SimulationError("commute needs two distinct nodes, got i = j = " + str(i))
        return cls('commute', (i, j))

    def check(self, g, start):
        """Raise unless the rule makes sense for a walk on g from start"""
        for x in self.targets + (start,):
            if not 0 <= x < g.n:
                raise NodeIndexError("node " + str(x) + " outside 0.." + str(g.n - 1))
        if self.kind == 'hit-target' and self.targets[0] == start:
            raise SimulationError("hit-target rule with target equal to start " + str(start))
        if self.kind == 'commute' and self.targets[0] != start:
            raise SimulationError("commute rule for i=" + str(self.targets[0]) +
                                  " must start at i, not at " + str(start))

    def __eq__(self, other):
        if not isinstance(other, StoppingRule):
            return NotImplemented
        return self.kind == other.kind and self.targets == other.targets

    def __hash__(self):
        return hash((self.kind, self.targets))

    def __repr__(self):
        return 'StoppingRule(' + repr(self.kind) + ', ' + str(list(self.targets)) + ')'


class StoppingTimes(object):
    """Per-trial stopping times of one simulation run

    Attributes
    ----------
    times : ndarray of int64, shape (trials,)
        Stopping time, -1 for censored trials
    censored : ndarray of bool, shape (trials,)
    rule : StoppingRule
    config : SimulationConfig
    rng : str
        Generator algorithm identifier
    """

    def __init__(self, times, rule, config, rng=RNG_ALGORITHM):
        times = np.asarray(times, dtype=np.int64)
        times.setflags(write=False)
        self.times = times
        self.censored = times < 0
        self.rule = rule
        self.config = config
        self.rng = rng

    @property
    def trials(self):
        return self.times.size

    @property
    def censored_count(self):
        return int(self.censored.sum())

    def __len__(self):
        return self.trials

    def __repr__(self):
        return ('StoppingTimes(rule=' + repr(self.rule) + ', trials=' + str(self.trials) +
                ', censored=' + str(self.censored_count) + ')')


def _walk_batch(g, start, rule, size, step_cap, rng):
    """Walk `size` independent trials in lock-step until each stops or hits the cap"""
    position = np.full(size, start, dtype=np.int64)
    times = np.full(size, -1, dtype=np.int64)
    active = np.arange(size)
    degree, indptr, indices = g.degree, g.indptr, g.indices

    if rule.kind in ('hit-all', 'cover-all'):
        tracked = np.ones(g.n, dtype=bool)
        if rule.kind == 'hit-all':
            tracked[:] = False
            tracked[list(rule.targets)] = True
        visited = np.zeros((size, g.n), dtype=bool)
        visited[:, start] = True
        remaining = np.full(size, int(tracked.sum()) - int(tracked[start]), dtype=np.int64)
        times[remaining == 0] = 0
        active = active[remaining > 0]
    elif rule.kind == 'commute':
        returning = np.zeros(size, dtype=bool)

    t = 0
    while active.size and t < step_cap:
        t += 1
        here = position[active]
        offsets = rng.integers(0, degree[here])
        there = indices[indptr[here] + offsets]
        position[active] = there
        if rule.kind == 'hit-target':
            finished = there == rule.targets[0]
        elif rule.kind == 'commute':
            i, j = rule.targets
            finished = returning[active] & (there == i)
            returning[active] |= there == j
        else:
            fresh = tracked[there] & ~visited[active, there]
            visited[active, there] = True
            remaining[active] -= fresh
            finished = remaining[active] == 0
        times[active[finished]] = t
        active = active[~finished]
    return times


def simulate_walk_until(g, start, rule, config):
    """Sample stopping times of the walk on g from start

    At each step the walker moves to a uniformly chosen neighbour. Trials run
    in batches of `config.batch_size`; batch b uses its own generator derived
    from (config.seed, b), so the sample is fully determined by the config.

    Parameters
    ----------
    g : Graph
    start : int
    rule : StoppingRule
        The start node counts as visited for 'cover-all' and 'hit-all'. For
        'commute' (i, j) the walk must start at i; it stops on its first
        return to i after having reached j.
    config : SimulationConfig

    Returns
    -------
    StoppingTimes

    Raises
    ------
    SimulationError
        If the rule does not fit the start node
    NodeIndexError
        If a node lies outside the graph

    Examples
    --------
    >>> from walkpy.graphs import generate_graph
    >>> sample = simulate_walk_until(generate_graph('complete', 2), 0,
    ...                              StoppingRule.hit_target(1), SimulationConfig(trials=5))
    >>> sample.times.tolist()
    [1, 1, 1, 1, 1]
    """
    rule.check(g, start)
    times = np.empty(config.trials, dtype=np.int64)
    for batch, lo in enumerate(range(0, config.trials, config.batch_size)):
        size = min(config.batch_size, config.trials - lo)
        times[lo:lo + size] = _walk_batch(g, start, rule, size, config.step_cap, config.generator(batch))
    sample = StoppingTimes(times, rule, config)
    _log.debug("simulated %d trials of %r, %d censored at cap %d", config.trials, rule,
               sample.censored_count, config.step_cap)
    return sample
