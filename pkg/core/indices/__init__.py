from core.indices.enumeration import BruteForceResult, brute_force_minimum
from core.indices.hitting import HittingTimes, commute_identity_residual, hitting_times, stationary_distribution
from core.indices.identities import (
    IdentityCheck,
    VerificationReport,
    relative_error,
    verify_all,
    verify_decomposition,
    verify_hitting_spectral,
)
from core.indices.kirchhoff import (
    IndexValues,
    additive_index,
    degree_distance,
    index_values,
    kirchhoff_index,
    multiplicative_index,
    multiplicative_index_spectral,
)
from core.indices.resistance import ResistanceMatrix, effective_resistances, resistance_floor_violations
