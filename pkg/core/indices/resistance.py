from dataclasses import dataclass

import numpy as np

from core.graph.models import Graph
from core.spectral.linalg import laplacian, pseudoinverse


@dataclass(frozen=True)
class ResistanceMatrix:
    """Pairwise effective resistances r_ij (unit resistor per edge)."""
    r: np.ndarray

    @property
    def n(self) -> int:
        return self.r.shape[0]

    @property
    def r_max(self) -> float:
        return float(self.r.max())

    def __getitem__(self, pair) -> float:
        i, j = pair
        return float(self.r[i, j])


def effective_resistances(g: Graph, cutoff: float = 1e-9) -> ResistanceMatrix:
    """r_ij = L+_ii + L+_jj - 2 L+_ij."""
    lp = pseudoinverse(laplacian(g), cutoff=cutoff)
    diag = np.diag(lp)
    r = diag[:, None] + diag[None, :] - 2.0 * lp
    r = (r + r.T) / 2.0
    np.fill_diagonal(r, 0.0)
    return ResistanceMatrix(r=r)


def edge_lower_bound(d_i: int, d_j: int) -> float:
    """Resistance floor for an edge with d_i d_j > 1: (d_i + d_j - 2) / (d_i d_j - 1)."""
    return (d_i + d_j - 2) / (d_i * d_j - 1)


def non_edge_lower_bound(d_i: int, d_j: int) -> float:
    """Resistance floor for a non-adjacent pair: 1/d_i + 1/d_j."""
    return 1.0 / d_i + 1.0 / d_j


def resistance_floor_violations(g: Graph, rm: ResistanceMatrix, slack: float = 1e-9):
    """Pairs (i, j, r_ij, floor) where r_ij falls below its degree floor by more than `slack`."""
    d = g.degrees
    violations = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                if d[i] * d[j] <= 1:
                    continue
                floor = edge_lower_bound(int(d[i]), int(d[j]))
            else:
                floor = non_edge_lower_bound(int(d[i]), int(d[j]))
            if rm.r[i, j] < floor - slack:
                violations.append((i, j, float(rm.r[i, j]), floor))
    return violations
