"""Shared numerical constants and defaults for walkpy computations"""

import math

# Transition matrices up to this many nodes are stored dense; larger graphs use CSR.
DENSE_LIMIT = 1024

# Erdos-Renyi samples are redrawn with seed + 1 until connected, at most this often.
ER_RETRY_BUDGET = 1000

# Exact inclusion-exclusion enumerates 2**(n-1) - 1 subsets.
EXACT_CAP_DEFAULT = 16
EXACT_CAP_CEILING = 24

# Monte Carlo
STEP_CAP_DEFAULT = 10 ** 6
MC_TRIALS_DEFAULT = 100000
MC_BATCH_SIZE = 8192
DEFAULT_CONFIDENCE = 0.99
RNG_ALGORITHM = 'numpy.random.PCG64/SeedSequence(seed, spawn_key=(batch,))'

# Tolerances
ROW_SUM_TOL = 1e-12
CDF_UPPER_TOL = 1e-9
MONOTONE_TOL = 1e-12
PMF_NEG_TOL = 1e-12
PMF_SUM_TOL = 1e-9


def default_horizon(n):
    """Default horizon T = ceil(100 * n * ln(n)), never less than 1

    Parameters
    ----------
    n : int
        Node count

    Returns
    -------
    int

    Examples
    --------
    >>> default_horizon(4)
    555
    """
    if n < 2:
        return 1
    return max(1, int(math.ceil(100 * n * math.log(n))))
