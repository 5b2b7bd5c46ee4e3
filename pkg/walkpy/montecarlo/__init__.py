"""Monte Carlo oracle: simulated stopping times, empirical CDFs and DKW bands"""

from walkpy.montecarlo.simulation import SimulationConfig, StoppingRule, StoppingTimes,\
    simulate_walk_until, RULE_KINDS
from walkpy.montecarlo.empirical import EmpiricalCdf, empirical_cdf, dkw_band
