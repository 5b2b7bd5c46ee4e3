"""Empirical CDFs of simulated stopping times and their DKW confidence bands"""

import math

import numpy as np

from walkpy.constants import DEFAULT_CONFIDENCE
from walkpy.errors import SimulationError, HorizonMismatchError
from walkpy.chains.series import DistributionSeries


def dkw_band(trials, confidence=DEFAULT_CONFIDENCE):
    """Dvoretzky-Kiefer-Wolfowitz half-width

    With probability `confidence`, sup_t |F_hat(t) - F(t)| <= eps where
    eps = sqrt(ln(2 / (1 - confidence)) / (2 trials)).

    Parameters
    ----------
    trials : int
    confidence : float, optional
        In (0, 1). Default 0.99.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If confidence is outside (0, 1) or trials < 1

    Examples
    --------
    >>> round(dkw_band(100000, 0.99), 5)
    0.00515
    """
    if not 0.0 < confidence < 1.0:
        raise ValueError("'confidence' arg must lie in (0, 1), got " + repr(confidence))
    if trials < 1:
        raise ValueError("'trials' arg must be at least 1, got " + repr(trials))
    return math.sqrt(math.log(2.0 / (1.0 - confidence)) / (2.0 * trials))


class EmpiricalCdf(object):
    """Fraction of trials stopped by t, for t = 1..T

    Attributes
    ----------
    values : ndarray, shape (T,)
    trials : int
    censored : int
        Trials that hit the step cap without stopping; they add mass at no t
    """

    def __init__(self, values, trials, censored):
        values = np.asarray(values, dtype=float)
        values.setflags(write=False)
        self.values = values
        self.trials = int(trials)
        self.censored = int(censored)

    @property
    def horizon(self):
        return self.values.size

    @property
    def times(self):
        return np.arange(1, self.horizon + 1)

    def band(self, confidence=DEFAULT_CONFIDENCE):
        """Lower and upper DKW envelope, clipped to [0, 1]"""
        eps = dkw_band(self.trials, confidence)
        return np.clip(self.values - eps, 0.0, 1.0), np.clip(self.values + eps, 0.0, 1.0)

    def to_series(self, kind, method='monte-carlo', meta=None):
        meta = dict(meta or {}, trials=self.trials, censored=self.censored)
        return DistributionSeries(self.values, kind, method=method, meta=meta)

    def sup_distance(self, series):
        """max_t |F_hat(t) - F(t)| against a computed series of the same horizon"""
        if series.horizon != self.horizon:
            raise HorizonMismatchError("empirical horizon " + str(self.horizon) +
                                       " differs from series horizon " + str(series.horizon))
        return float(np.max(np.abs(self.values - series.cdf)))

    def __len__(self):
        return self.horizon

    def __repr__(self):
        return ('EmpiricalCdf(horizon=' + str(self.horizon) + ', trials=' + str(self.trials) +
                ', censored=' + str(self.censored) + ')')


def empirical_cdf(samples, horizon):
    """Empirical CDF of stopping times up to `horizon`

    Parameters
    ----------
    samples : StoppingTimes or array_like of int
        Negative entries mark censored trials
    horizon : int

    Returns
    -------
    EmpiricalCdf
        F_hat(T) = (trials - censored) / trials whenever every uncensored
        time is at most T

    Raises
    ------
    SimulationError
        If the sample is empty

    Examples
    --------
    >>> empirical_cdf([1, 1, 2, 3], 3).values.tolist()
    [0.5, 0.75, 1.0]
    """
    times = np.asarray(getattr(samples, 'times', samples), dtype=np.int64)
    if times.size == 0:
        raise SimulationError("empirical CDF of an empty sample")
    horizon = int(horizon)
    if horizon < 1:
        raise ValueError("'horizon' arg must be at least 1, got " + str(horizon))
    censored = times < 0
    stopped = times[~censored]
    counts = np.bincount(np.clip(stopped, 0, horizon + 1), minlength=horizon + 2)
    # a trial stopped at time 0 counts from t = 1 on
    values = np.cumsum(counts[:horizon + 1])[1:] / times.size
    return EmpiricalCdf(values, times.size, int(censored.sum()))
