from core.bounds.catalog import BoundCatalog, BoundResult, evaluate_all, sandwich_violations
from core.bounds.formulas import (
    RatioInvariants,
    condition_17,
    lb_degree_harmonic,
    lb_leaves,
    lb_leaves_tree,
    lb_leaves_tree_v2,
    lb_leaves_v2,
    lb_major_h,
    lb_major_hstar,
    lb_mindeg,
    lb_mindeg_full,
    lb_sigma,
    lb_universal,
    phi,
    psi,
    ratio_invariants,
    ub_distance_regular,
    ub_reference,
    ub_resistance,
    ub_resistance_global,
    ub_spectral,
    ub_spectral_bipartite,
    ub_tree,
)
