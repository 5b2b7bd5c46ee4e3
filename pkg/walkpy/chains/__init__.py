"""Absorbing-chain machinery for hitting-time and commute-time distributions"""

from walkpy.chains.series import DistributionSeries, PmfSeries, pmf_from_cdf, SERIES_KINDS
from walkpy.chains.absorbing import AbsorbingSystem, absorbing_system, hitting_cdf,\
    union_hitting_cdf, union_hitting_batch, iter_absorbed_mass
from walkpy.chains.commute import CommuteChain, commute_chain, commute_cdf,\
    commute_chain_occupancy, commute_pmf_convolution
