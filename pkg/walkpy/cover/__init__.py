"""Cover-time CDFs: exact inclusion-exclusion, product approximations and closed forms"""

from walkpy.cover.exact import cover_cdf_exact, subset_masks
from walkpy.cover.approx import NodeOrdering, default_ordering, explicit_ordering, cover_cdf_approx,\
    cover_cdf_approx_all_pairs
from walkpy.cover.closed import cover_cdf_complete, cover_pmf_complete, cover_cdf_cycle, cover_cdf_path,\
    alternating_power_sum, cycle_order, path_ends
from walkpy.cover.query import CoverQuery, cover_cdf, sup_error, error_by_start, METHODS
