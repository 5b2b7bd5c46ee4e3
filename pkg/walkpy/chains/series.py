"""Time-indexed CDF and PMF series over t = 1..T"""

import numpy as np
import pandas as pd

from walkpy.constants import CDF_UPPER_TOL, MONOTONE_TOL, PMF_NEG_TOL, PMF_SUM_TOL

SERIES_KINDS = ['hitting', 'union-hitting', 'commute', 'cover']


class DistributionSeries(object):
    """CDF values F(1..T) of a stopping time

    Parameters
    ----------
    cdf : array_like, shape (T,)
        F(t) at index t - 1
    kind : str
        One of 'hitting', 'union-hitting', 'commute', 'cover'
    method : str, optional
        Tag of the computation that produced the values
    meta : dict, optional
        Free-form provenance (subset counts, propagation counts, trials, ...)
    check : bool, optional
        Default True. Verify 0 <= F <= 1 + 1e-9 and monotonicity within 1e-12.
        Approximations pass False since their raw values may violate both.

    Raises
    ------
    ValueError
        If 'kind' is unknown, the series is empty, or a checked invariant fails
    """

    def __init__(self, cdf, kind, method=None, meta=None, check=True):
        if kind not in SERIES_KINDS:
            raise ValueError("'kind' arg must be member of " + str(SERIES_KINDS))
        values = np.array(cdf, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("'cdf' arg must be a non-empty 1-d sequence")
        values.setflags(write=False)
        self._cdf = values
        self.kind = kind
        self.method = method
        self.meta = dict(meta or {})
        if check:
            self.validate()

    @property
    def cdf(self):
        return self._cdf

    @property
    def horizon(self):
        return self._cdf.size

    @property
    def times(self):
        return np.arange(1, self.horizon + 1)

    def value(self, t):
        """F(t) for 1 <= t <= T"""
        if not 1 <= t <= self.horizon:
            raise IndexError("t=" + str(t) + " outside 1.." + str(self.horizon))
        return float(self._cdf[t - 1])

    def is_monotone(self, tol=MONOTONE_TOL):
        return bool(np.all(np.diff(self._cdf) >= -tol))

    def validate(self):
        if np.any(~np.isfinite(self._cdf)):
            raise ValueError(self.kind + " CDF has non-finite values")
        if self._cdf.min() < -CDF_UPPER_TOL or self._cdf.max() > 1 + CDF_UPPER_TOL:
            raise ValueError(self.kind + " CDF leaves [0, 1]: range [" + repr(self._cdf.min()) +
                             ", " + repr(self._cdf.max()) + "]")
        if not self.is_monotone():
            raise ValueError(self.kind + " CDF decreases by more than " + repr(MONOTONE_TOL))

    def clamped(self):
        """Running maximum clipped to [0, 1], for plotting raw approximations"""
        values = np.clip(np.maximum.accumulate(np.nan_to_num(self._cdf, nan=0.0)), 0.0, 1.0)
        meta = dict(self.meta, clamped=True)
        return DistributionSeries(values, self.kind, self.method, meta, check=False)

    def pmf(self):
        return pmf_from_cdf(self)

    def to_frame(self):
        """pandas DataFrame with columns t, cdf, pmf"""
        return pd.DataFrame({'t': self.times, 'cdf': self._cdf, 'pmf': self.pmf().pmf})

    def __len__(self):
        return self.horizon

    def __repr__(self):
        return ('DistributionSeries(kind=' + repr(self.kind) + ', method=' + repr(self.method) +
                ', horizon=' + str(self.horizon) + ')')


class PmfSeries(object):
    """PMF values p(1..T) plus the mass beyond T

    Parameters
    ----------
    pmf : array_like, shape (T,)
    tail_mass : float, optional
        1 - sum of pmf when omitted
    kind : str, optional
    check : bool, optional
        Default True. Verify p(t) >= -1e-12 and total mass 1 within 1e-9.
    """

    def __init__(self, pmf, tail_mass=None, kind='hitting', check=True):
        values = np.array(pmf, dtype=float)
        values.setflags(write=False)
        self._pmf = values
        self.kind = kind
        self.tail_mass = float(1.0 - values.sum()) if tail_mass is None else float(tail_mass)
        if check:
            if np.any(values < -PMF_NEG_TOL):
                raise ValueError("PMF has negative mass below " + repr(-PMF_NEG_TOL))
            if abs(values.sum() + self.tail_mass - 1.0) > PMF_SUM_TOL:
                raise ValueError("PMF plus tail mass does not sum to 1")

    @property
    def pmf(self):
        return self._pmf

    @property
    def horizon(self):
        return self._pmf.size

    def value(self, t):
        if not 1 <= t <= self.horizon:
            raise IndexError("t=" + str(t) + " outside 1.." + str(self.horizon))
        return float(self._pmf[t - 1])

    def cumulative(self):
        """Running sums of the PMF, i.e. the CDF it induces"""
        return np.cumsum(self._pmf)

    def __len__(self):
        return self.horizon

    def __repr__(self):
        return 'PmfSeries(kind=' + repr(self.kind) + ', horizon=' + str(self.horizon) + ')'


def pmf_from_cdf(s):
    """Difference a CDF series into its PMF, p(1) = F(1), p(t) = F(t) - F(t - 1)

    Parameters
    ----------
    s : DistributionSeries

    Returns
    -------
    PmfSeries
        Tail mass 1 - F(T). Not re-checked: non-negativity is exactly the
        monotonicity of the CDF and the total telescopes to 1.

    Examples
    --------
    >>> pmf_from_cdf(DistributionSeries([1.0, 1.0, 1.0], 'hitting')).pmf.tolist()
    [1.0, 0.0, 0.0]
    """
    values = np.diff(s.cdf, prepend=0.0)
    return PmfSeries(values, tail_mass=1.0 - s.cdf[-1], kind=s.kind, check=False)

