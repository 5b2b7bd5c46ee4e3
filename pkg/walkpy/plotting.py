"""Overlay plots of CDF and PMF series"""

import matplotlib.pyplot as plt


def plot_series(series, labels=None, ax=None, what='cdf'):
    """Draw several series on one Axes against t

    Parameters
    ----------
    series : sequence of DistributionSeries
    labels : sequence of str, optional
        Default the method tag of each series
    ax : matplotlib.axes.Axes, optional
        New figure when omitted
    what : str, optional
        'cdf' or 'pmf'

    Returns
    -------
    matplotlib.axes.Axes
    """
    if what not in ['cdf', 'pmf']:
        raise ValueError("'what' arg must be member of ['cdf', 'pmf']")
    if labels is None:
        labels = [s.method for s in series]
    if len(labels) != len(series):
        raise ValueError("'labels' arg needs one label per series")
    if ax is None:
        fig, ax = plt.subplots()
    for s, label in zip(series, labels):
        values = s.cdf if what == 'cdf' else s.pmf().pmf
        ax.plot(s.times, values, label=label)
    ax.set_xlabel('t')
    ax.set_ylabel('F(t)' if what == 'cdf' else 'p(t)')
    ax.grid(which='both')
    ax.legend()
    return ax
