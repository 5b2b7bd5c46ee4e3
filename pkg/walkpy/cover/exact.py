"""Exact cover-time CDF by inclusion-exclusion over all non-empty target sets"""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from walkpy.constants import EXACT_CAP_DEFAULT, EXACT_CAP_CEILING
from walkpy.errors import CapExceededError
from walkpy.chains.absorbing import _check_horizon
from walkpy.chains.series import DistributionSeries

_log = logging.getLogger(__name__)

# Entries of the stacked occupancy matrix per chunk of subsets
CHUNK_ENTRIES = 1 << 16


def subset_masks(others, n, lo, hi):
    """Indicator rows and inclusion-exclusion signs for subset codes lo..hi-1

    Bit b of a code selects others[b].

    Returns
    -------
    masks : ndarray, shape (hi - lo, n)
    signs : ndarray, shape (hi - lo,)
        (-1)**(|S| + 1)
    """
    codes = np.arange(lo, hi, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(len(others), dtype=np.int64)) & 1
    masks = np.zeros((hi - lo, n))
    masks[:, others] = bits
    signs = np.where(bits.sum(axis=1) % 2 == 1, 1.0, -1.0)
    return masks, signs


def _signed_sums(m, z, masks, signs, horizon):
    """Per step: signed absorbed mass, signed free mass and unsigned absorbed mass"""
    free = 1.0 - masks
    absorbed_weights = signs[:, None] * masks
    free_weights = signs[:, None] * free
    occupancy = np.zeros(masks.shape)
    occupancy[:, z] = 1.0
    sums = np.empty((3, horizon))
    for t in range(horizon):
        occupancy = m.step(occupancy * free) + occupancy * masks
        sums[0, t] = np.einsum('ij,ij->', occupancy, absorbed_weights)
        sums[1, t] = np.einsum('ij,ij->', occupancy, free_weights)
        sums[2, t] = np.einsum('ij,ij->', occupancy, masks)
    return sums


def cover_cdf_exact(m, z, horizon=None, cap=EXACT_CAP_DEFAULT, allow_large=False, workers=1):
    """Exact cover-time CDF by inclusion-exclusion

    F(t) = sum over non-empty S subset of V minus {z} of (-1)**(|S| + 1) F_S(t),
    where F_S is the union hitting CDF of S. Each of the 2**(n-1) - 1 subsets is
    an independent absorbing propagation; subsets are stacked into chunks and
    propagated together.

    Parameters
    ----------
    m : TransitionMatrix
    z : int
        Start node
    horizon : int, optional
    cap : int, optional
        Largest n accepted. Default 16.
    allow_large : bool, optional
        Must be True for a cap above 24
    workers : int, optional
        Threads over chunks. Chunk results are reduced in chunk order, so the
        output does not depend on this value.

    Returns
    -------
    DistributionSeries
        kind 'cover'; meta['subsets'] counts the subsets enumerated

    Raises
    ------
    CapExceededError
        If n > cap
    ValueError
        If cap > 24 without allow_large

    Examples
    --------
    >>> from walkpy.graphs import generate_graph, transition_matrix
    >>> m = transition_matrix(generate_graph('complete', 3))
    >>> cover_cdf_exact(m, 0, horizon=3).cdf.tolist()
    [0.0, 0.5, 0.75]
    """
    if cap > EXACT_CAP_CEILING and not allow_large:
        raise ValueError("'cap' arg above " + str(EXACT_CAP_CEILING) + " needs allow_large=True")
    if m.n > cap:
        raise CapExceededError("exact cover CDF enumerates 2**(n-1) - 1 subsets; n=" + str(m.n) +
                               " exceeds cap " + str(cap) + ", use method 'approx' or 'monte-carlo'")
    z = m.check_node(z, 'z')
    horizon = _check_horizon(m, horizon)
    others = [v for v in range(m.n) if v != z]
    total = 1 << len(others)
    rows = max(1, CHUNK_ENTRIES // m.n)
    bounds = [(lo, min(lo + rows, total)) for lo in range(1, total, rows)]
    _log.debug("exact cover: %d subsets in %d chunks over %d steps", total - 1, len(bounds), horizon)

    def run(bound):
        masks, signs = subset_masks(others, m.n, bound[0], bound[1])
        return masks.shape[0], _signed_sums(m, z, masks, signs, horizon)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, bounds))
    else:
        chunks = [run(bound) for bound in bounds]
    sums = np.zeros((3, horizon))
    subsets = 0
    for count, chunk in chunks:
        subsets += count
        sums += chunk
    if subsets != total - 1:
        _log.warning("exact cover: enumerated %d subsets, expected %d", subsets, total - 1)

    # the signs of all non-empty subsets add up to exactly 1, so F = 1 - (signed free mass);
    # pick whichever side has the smaller magnitude to sum
    from_absorbed = sums[2] < 0.5 * subsets
    cdf = np.where(from_absorbed, sums[0], 1.0 - sums[1])
    return DistributionSeries(cdf, 'cover', method='exact', check=False,
                              meta={'start': z, 'subsets': subsets})
