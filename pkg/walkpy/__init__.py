"""Hitting, commute and cover time distributions of random walks on graphs"""

__version__ = '0.1.0.dev1'

from walkpy.graphs import Graph, build_graph, generate_graph, parse_edge_list, read_edge_list,\
    transition_matrix
from walkpy.chains import DistributionSeries, PmfSeries, hitting_cdf, union_hitting_cdf, commute_cdf,\
    commute_pmf_convolution
from walkpy.cover import CoverQuery, cover_cdf, cover_cdf_exact, cover_cdf_approx, sup_error
from walkpy.montecarlo import SimulationConfig, StoppingRule, simulate_walk_until, empirical_cdf, dkw_band
