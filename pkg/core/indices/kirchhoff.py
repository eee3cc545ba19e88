from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.graph.models import Graph
from core.graph.properties import distance_matrix
from core.indices.resistance import ResistanceMatrix, effective_resistances
from core.spectral.linalg import SpectralData, transition_spectrum


class IndexValues(BaseModel):
    """Kirchhoff index R, multiplicative R* and additive R+ of one graph."""
    model_config = ConfigDict(frozen=True)

    r: float
    r_star: float
    r_plus: float


def kirchhoff_index(rm: ResistanceMatrix) -> float:
    """R(G) = sum_{i<j} R_ij."""
    return float(np.triu(rm.r, k=1).sum())


def multiplicative_index(g: Graph, rm: ResistanceMatrix) -> float:
    """R*(G) = sum_{i<j} d_i d_j R_ij."""
    d = g.degrees.astype(float)
    return float(d @ rm.r @ d) / 2.0


def additive_index(g: Graph, rm: ResistanceMatrix) -> float:
    """R+(G) = sum_{i<j} (d_i + d_j) R_ij = sum_i d_i sum_j R_ij."""
    d = g.degrees.astype(float)
    return float(d @ rm.r.sum(axis=1))


def index_values(g: Graph, rm: Optional[ResistanceMatrix] = None) -> IndexValues:
    rm = rm if rm is not None else effective_resistances(g)
    return IndexValues(
        r=kirchhoff_index(rm),
        r_star=multiplicative_index(g, rm),
        r_plus=additive_index(g, rm),
    )


def spectral_resolvent_sum(spectrum: SpectralData) -> float:
    """sum_{k>=2} 1 / (1 - lambda_k)."""
    return float(np.sum(1.0 / (1.0 - spectrum.lambdas[1:])))


def multiplicative_index_spectral(g: Graph, spectrum: Optional[SpectralData] = None) -> float:
    """R*(G) = 2|E| sum_{k>=2} 1 / (1 - lambda_k)."""
    spectrum = spectrum if spectrum is not None else transition_spectrum(g)
    return 2.0 * g.m * spectral_resolvent_sum(spectrum)


def degree_distance(g: Graph) -> float:
    """sum_{i<j} (d_i + d_j) dist(i, j); equals R+ on trees."""
    d = g.degrees.astype(float)
    return float(d @ distance_matrix(g).sum(axis=1))
