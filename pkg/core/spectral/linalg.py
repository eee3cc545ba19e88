import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import EigenSolverError, PseudoinverseError
from core.graph.models import Graph

SIGN_TOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues ascending; eigenvectors are the orthonormal columns of `vectors`."""
    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.T


@dataclass(frozen=True)
class SpectralData:
    """
    Spectrum of the random-walk transition matrix P = D^-1 A, obtained from
    the symmetric S = D^-1/2 A D^-1/2. `lambdas` are sorted descending with
    lambdas[0] == 1; column k of `v` is the unit eigenvector for lambdas[k],
    so v_kj in the usual notation is v[j, k], and v[:, 0] = sqrt(pi).
    """
    lambdas: np.ndarray
    v: np.ndarray
    pi: np.ndarray
    sigma: float
    k_param: Optional[int]
    theta: Optional[float]

    @property
    def lambda2(self) -> float:
        return float(self.lambdas[1])

    @property
    def n(self) -> int:
        return len(self.lambdas)


def symmetrize(a) -> np.ndarray:
    """Mirrors a square matrix so that a_ij == a_ji exactly."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise EigenSolverError(f"expected a square matrix, got shape {a.shape}")
    return (a + a.T) / 2.0


def symmetric_eigen(a) -> EigenDecomposition:
    """
    Dense symmetric eigen-decomposition (LAPACK syevd through numpy), which is
    deterministic for a fixed input. Each eigenvector is oriented so that its
    first non-negligible component is positive.
    """
    a = symmetrize(a)
    if not np.all(np.isfinite(a)):
        raise EigenSolverError("matrix has non-finite entries")
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as e:
        raise EigenSolverError(f"eigensolver did not converge: {e}") from e

    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        leading = np.flatnonzero(np.abs(column) > SIGN_TOL)
        if leading.size and column[leading[0]] < 0:
            vectors[:, k] = -column
    return EigenDecomposition(values=values, vectors=vectors)


def laplacian(g: Graph) -> np.ndarray:
    return np.diag(g.degrees.astype(float)) - g.adjacency_matrix


def pseudoinverse(l, cutoff: float = 1e-9) -> np.ndarray:
    """
    Moore-Penrose pseudoinverse of a connected-graph Laplacian. Eigenvalues
    with |lambda| <= cutoff * max(1, lambda_max) are treated as zero and
    exactly one such eigenvalue is allowed.
    """
    eig = symmetric_eigen(l)
    scale = max(1.0, float(eig.values[-1]))
    zero = np.abs(eig.values) <= cutoff * scale
    if np.count_nonzero(zero) != 1:
        raise PseudoinverseError(
            f"expected exactly one zero eigenvalue, found {np.count_nonzero(zero)} "
            "(is the graph disconnected?)"
        )
    keep = ~zero
    vectors = eig.vectors[:, keep]
    return symmetrize((vectors / eig.values[keep]) @ vectors.T)


def sigma(g: Graph) -> float:
    """sigma^2 = (2/N) * sum over edges of 1/(d_i d_j) = tr(P^2)/N."""
    d = g.degrees
    total = sum(1.0 / (d[u] * d[v]) for u, v in g.edges)
    return math.sqrt(2.0 * total / g.n)


def spectral_gap_parameters(lambda2: float, n: int, snap: float = 1e-9):
    """
    k = floor((lambda2 (N-1) + 1) / (lambda2 + 1)) and
    theta = lambda2 (N-k-2) - k + 2; both None when lambda2 == -1.
    The ratio is snapped to an integer when within `snap` of one.
    """
    if lambda2 <= -1.0 + 1e-12:
        return None, None
    ratio = (lambda2 * (n - 1) + 1.0) / (lambda2 + 1.0)
    k = math.floor(ratio + snap)
    theta = lambda2 * (n - k - 2) - k + 2.0
    return k, theta


def transition_spectrum(g: Graph, snap: float = 1e-9) -> SpectralData:
    d = g.degrees.astype(float)
    root = np.sqrt(d)
    s = g.adjacency_matrix / np.outer(root, root)
    eig = symmetric_eigen(s)

    lambdas = eig.values[::-1].copy()
    v = eig.vectors[:, ::-1].copy()
    pi = d / d.sum()
    v[:, 0] = np.sqrt(pi)

    k, theta = spectral_gap_parameters(float(lambdas[1]), g.n, snap=snap)
    return SpectralData(
        lambdas=lambdas,
        v=v,
        pi=pi,
        sigma=sigma(g),
        k_param=k,
        theta=theta,
    )
