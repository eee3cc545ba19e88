"""
Closed-form lower and upper bounds on the additive degree-Kirchhoff index R+.

Each formula takes only the invariants it needs. Integer and Fraction inputs
are evaluated in exact rational arithmetic and returned as int/Fraction;
float inputs give floats. A failed applicability predicate raises
InapplicableBoundError with the reason.
"""
import math
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.errors import InapplicableBoundError

Number = Union[int, Fraction, float]

# (2 + 188/101), the distance-regular resistance constant
DISTANCE_REGULAR_CONSTANT = Fraction(390, 101)


def _exact(x: Number) -> Number:
    if isinstance(x, (bool, np.bool_)):
        raise TypeError("boolean is not a numeric bound input")
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return x
    return float(x)


def _div(a: Number, b: Number) -> Number:
    a, b = _exact(a), _exact(b)
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


def _require(condition: bool, reason: str) -> None:
    if not condition:
        raise InapplicableBoundError(reason)


# --- lower bounds from the degree-based resistance floors -------------------

def lb_universal(n: int) -> int:
    """R+ >= 2(N-1)^2, attained by K_N."""
    return 2 * (int(n) - 1) ** 2


def lb_degree_harmonic(n: int, m_edges: int, harmonic_sum: Number) -> Number:
    """R+ >= N(N-4) + 2|E| sum 1/d_j."""
    n, m_edges = int(n), int(m_edges)
    return n * (n - 4) + 2 * m_edges * _exact(harmonic_sum)


def _leaf_bracket(n: int, m_edges: int, m_leaves: int) -> Number:
    """M + (N-M)^2 / (2|E| - M)."""
    _require(1 <= m_leaves < n, f"needs 1 <= M < N (M={m_leaves}, N={n})")
    _require(2 * m_edges - m_leaves > 0, "needs 2|E| - M > 0")
    return m_leaves + _div((n - m_leaves) ** 2, 2 * m_edges - m_leaves)


def lb_leaves(n: int, m_edges: int, m_leaves: int) -> Number:
    """R+ >= N(N-4) + 2|E| [M + (N-M)^2 / (2|E| - M)] for graphs with M leaves."""
    n, m_edges, m_leaves = int(n), int(m_edges), int(m_leaves)
    return n * (n - 4) + 2 * m_edges * _leaf_bracket(n, m_edges, m_leaves)


def lb_leaves_tree(n: int, m_leaves: int) -> Number:
    """The leaf bound with |E| = N-1; trees with M >= 2 leaves and N > 2."""
    _require(n > 2, "needs N > 2")
    _require(m_leaves >= 2, "a tree bound needs M >= 2 leaves")
    return lb_leaves(n, n - 1, m_leaves)


def lb_mindeg_full(n: int, m_edges: int, harmonic_sum: Number, d1: int) -> Number:
    """R+ >= N(N-2) + 2|E| sum 1/d_j - 4|E| / (1 + d_1), N > 2."""
    n, m_edges, d1 = int(n), int(m_edges), int(d1)
    _require(n > 2, "needs N > 2")
    return n * (n - 2) + 2 * m_edges * _exact(harmonic_sum) - _div(4 * m_edges, 1 + d1)


def lb_mindeg(n: int, m_edges: int, d1: int) -> Number:
    """R+ >= 2N(N-1) - 4|E| / (1 + d_1), N > 2."""
    n, m_edges, d1 = int(n), int(m_edges), int(d1)
    _require(n > 2, "needs N > 2")
    return 2 * n * (n - 1) - _div(4 * m_edges, 1 + d1)


def lb_leaves_v2(n: int, m_edges: int, m_leaves: int) -> Number:
    """R+ >= N(N-2) + 2|E| [M + (N-M)^2 / (2|E| - M)] - 2|E|."""
    n, m_edges, m_leaves = int(n), int(m_edges), int(m_leaves)
    return n * (n - 2) + 2 * m_edges * _leaf_bracket(n, m_edges, m_leaves) - 2 * m_edges


def lb_leaves_tree_v2(n: int, m_leaves: int) -> Number:
    """lb_leaves_v2 with |E| = N-1; never below lb_leaves_tree."""
    _require(n > 2, "needs N > 2")
    _require(m_leaves >= 2, "a tree bound needs M >= 2 leaves")
    return lb_leaves_v2(n, n - 1, m_leaves)


def condition_17(n: int, m_edges: int, d1: int) -> bool:
    """(1 + d_1)(N - 1) > 2|E|, i.e. lb_mindeg beats lb_universal."""
    return (1 + d1) * (n - 1) > 2 * m_edges


def phi(x: float, n: int, m_edges: int) -> float:
    """Phi(x) = x + (N - x)^2 / (2|E| - x), x >= 0; non-decreasing."""
    numerator = (n - x) ** 2
    if numerator == 0:
        return float(x)
    if 2 * m_edges - x <= 0:
        raise ValueError(f"Phi undefined at x={x} for |E|={m_edges}")
    return float(x + numerator / (2 * m_edges - x))


def psi(x: float, n: int, m_leaves: int) -> float:
    """Psi(x) = x [M + (N - M)^2 / (2x - M)], x >= N - 1; non-decreasing."""
    if 2 * x - m_leaves <= 0:
        raise ValueError(f"Psi undefined at x={x} for M={m_leaves}")
    return float(x * (m_leaves + (n - m_leaves) ** 2 / (2 * x - m_leaves)))


# --- majorization bounds -----------------------------------------------------

class RatioInvariants(BaseModel):
    """h = sum_{i<j} d_j/d_i and h_star = sum_{i<j} d_i/d_j over the ascending degree sequence."""
    model_config = ConfigDict(frozen=True)

    h: float
    h_star: float


def ratio_invariants(degrees: Sequence[int]) -> RatioInvariants:
    d = np.sort(np.asarray(degrees, dtype=float))
    upper = np.triu_indices(len(d), k=1)
    ratios = d[None, :] / d[:, None]
    return RatioInvariants(
        h=float(ratios[upper].sum()),
        h_star=float((1.0 / ratios)[upper].sum()),
    )


def _majorization(n: int, invariant: float) -> float:
    _require(invariant > 0, "needs a positive ratio invariant")
    pairs = n * (n - 1) / 2
    return n * (n - 3) + invariant + pairs ** 2 / invariant


def lb_major_h(n: int, h: float) -> float:
    """R+ >= N(N-3) + H + [N(N-1)/2]^2 / H."""
    return _majorization(int(n), float(h))


def lb_major_hstar(n: int, h_star: float) -> float:
    """Same form with H*; never better than lb_major_h."""
    return _majorization(int(n), float(h_star))


def semiregular_h(n1: int, a: int, n2: int, b: int) -> Number:
    """H for a graph with n1 vertices of degree a and n2 of degree b, a < b."""
    n = n1 + n2
    return Fraction(n * (n - 1), 2) + (Fraction(b, a) - 1) * n1 * n2


def full_binary_tree_h_printed(depth: int) -> Number:
    """
    The closed form N(N-1)/2 + 2N_1 + 3/2 N_2 + 2 N_1 N_2 printed for full binary
    trees (N_1 = 2^d leaves, N_2 = 2^d - 2 inner vertices of degree 3). It
    disagrees with the direct sum (226 vs 212 at depth 3) and is kept for reporting.
    """
    n1 = 2 ** depth
    n2 = 2 ** depth - 2
    n = 2 ** (depth + 1) - 1
    return Fraction(n * (n - 1), 2) + 2 * n1 + Fraction(3, 2) * n2 + 2 * n1 * n2


def sun_major_bound(n: int) -> Number:
    """lb_major_h in closed form for sun(n)."""
    numerator = n * (228 * n ** 2 - 1152 * n + 36 * n ** 3 + n ** 4 + 1152)
    return Fraction(numerator, 24 * (6 * n + n ** 2 - 12))


def sun_mindeg_bound(n: int) -> Number:
    """lb_mindeg in closed form for sun(n): N(15N - 22)/8."""
    return Fraction(n * (15 * n - 22), 8)


# --- spectral lower bound ----------------------------------------------------

def lb_sigma(n: int, sigma: float) -> float:
    """R+ >= N [1/(1 + t) + (N-2)^2 / (N - 1 - t)] + (N-1)^2 with t = sigma / sqrt(N-1)."""
    n = int(n)
    _require(n >= 2, "needs N >= 2")
    t = sigma / math.sqrt(n - 1)
    _require(t < n - 1, f"needs sigma/sqrt(N-1) < N-1 (got {t:.6g})")
    return n * (1.0 / (1.0 + t) + (n - 2) ** 2 / (n - 1 - t)) + (n - 1) ** 2


# --- upper bounds ------------------------------------------------------------

def ub_resistance(n: int, m_edges: int, r_max: float) -> Number:
    """R+ <= 2|E|(N-1) R with R the largest effective resistance."""
    return 2 * int(m_edges) * (int(n) - 1) * _exact(r_max)


def ub_resistance_global(n: int) -> int:
    """2|E|(N-1)R never exceeds N(N-1)^3."""
    return int(n) * (int(n) - 1) ** 3


def ub_tree(n: int, diam: int) -> int:
    """R+(T) <= 2(N-1)^2 D for trees."""
    return 2 * (int(n) - 1) ** 2 * int(diam)


def ub_distance_regular(n: int, k: int) -> Number:
    """R+ <= (2 + 188/101)(N-1)^2 for distance-regular graphs of degree k > 2."""
    _require(k > 2, f"needs degree k > 2 (k={k}); cycles have cubic R+")
    return DISTANCE_REGULAR_CONSTANT * (int(n) - 1) ** 2


def _spectral_hitting_term(n: int, m_edges: int, harmonic_sum: Number, lambda2: float) -> float:
    """(2|E| sum 1/d_j - N) / (1 - lambda_2)."""
    return (2 * m_edges * float(harmonic_sum) - n) / (1.0 - lambda2)


def _check_spectral(lambda2: float, k: Optional[int], theta: Optional[float]) -> None:
    _require(k is not None and theta is not None and lambda2 > -1.0, "spectral-gap bounds inapplicable (lambda_2 = -1)")
    _require(theta > 0, f"needs theta > 0 (theta={theta})")


def ub_spectral(n: int, m_edges: int, harmonic_sum: Number, lambda2: float, k: Optional[int], theta: Optional[float]) -> float:
    """R+ <= N[(N-k-2)/(1-lambda_2) + k/2 + 1/theta] + (2|E| sum 1/d_j - N)/(1-lambda_2)."""
    _check_spectral(lambda2, k, theta)
    gap = 1.0 - lambda2
    return n * ((n - k - 2) / gap + k / 2 + 1.0 / theta) + _spectral_hitting_term(n, m_edges, harmonic_sum, lambda2)


def ub_spectral_bipartite(n: int, m_edges: int, harmonic_sum: Number, lambda2: float, k: Optional[int], theta: Optional[float]) -> float:
    """Bipartite form: N[1/2 + (N-k-3)/(1-lambda_2) + k/2 + 1/theta] + the same hitting term."""
    _check_spectral(lambda2, k, theta)
    gap = 1.0 - lambda2
    return n * (0.5 + (n - k - 3) / gap + k / 2 + 1.0 / theta) + _spectral_hitting_term(n, m_edges, harmonic_sum, lambda2)


def complete_bipartite_spectral_bound(r: int, s: int) -> int:
    """ub_spectral_bipartite evaluated on K_{r,s}: 3r^2 + 3s^2 + 2rs - 3r - 3s."""
    return 3 * r * r + 3 * s * s + 2 * r * s - 3 * r - 3 * s


def ub_reference(n: int) -> Number:
    """(N^4 - N^3 - N^2 + N)/3: the earlier general upper bound, shown as a reference line."""
    n = int(n)
    return Fraction(n ** 4 - n ** 3 - n ** 2 + n, 3)
