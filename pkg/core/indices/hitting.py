from dataclasses import dataclass

import numpy as np

from core.graph.models import Graph
from core.indices.resistance import ResistanceMatrix


@dataclass(frozen=True)
class HittingTimes:
    """h[i, j] = E_i T_j for the simple random walk; pi is the stationary law."""
    h: np.ndarray
    pi: np.ndarray

    def commute_time(self, i: int, j: int) -> float:
        return float(self.h[i, j] + self.h[j, i])


def stationary_distribution(g: Graph) -> np.ndarray:
    d = g.degrees.astype(float)
    return d / d.sum()


def hitting_times(g: Graph, rm: ResistanceMatrix) -> HittingTimes:
    """
    E_i T_j = 1/2 sum_v d_v (r_ij + r_jv - r_iv)
            = |E| r_ij + ((R d)_j - (R d)_i) / 2,
    so one resistance matrix serves every entry.
    """
    d = g.degrees.astype(float)
    rd = rm.r @ d
    h = g.m * rm.r + 0.5 * (rd[None, :] - rd[:, None])
    np.fill_diagonal(h, 0.0)
    return HittingTimes(h=h, pi=stationary_distribution(g))


def commute_identity_residual(g: Graph, rm: ResistanceMatrix, ht: HittingTimes) -> float:
    """max_ij |h_ij + h_ji - 2|E| r_ij|."""
    return float(np.max(np.abs(ht.h + ht.h.T - 2.0 * g.m * rm.r)))
