from core.spectral.linalg import (
    EigenDecomposition,
    SpectralData,
    laplacian,
    pseudoinverse,
    sigma,
    spectral_gap_parameters,
    symmetric_eigen,
    symmetrize,
    transition_spectrum,
)
