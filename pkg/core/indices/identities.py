"""
Exact identities tying the resistance route, the hitting-time route and the
transition spectrum together. Every check is reported, never raised.
"""
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, computed_field

from core.graph.models import Graph
from core.graph.properties import is_bipartite
from core.indices.hitting import HittingTimes, commute_identity_residual, hitting_times
from core.indices.kirchhoff import (
    additive_index,
    multiplicative_index,
    multiplicative_index_spectral,
    spectral_resolvent_sum,
)
from core.indices.resistance import ResistanceMatrix, effective_resistances, resistance_floor_violations
from core.spectral.linalg import SpectralData, transition_spectrum


def relative_error(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


class IdentityCheck(BaseModel):
    identity: str
    target: Optional[int] = None
    lhs: float
    rhs: float
    abs_error: float
    rel_error: float
    passed: bool


class VerificationReport(BaseModel):
    tolerance: float
    checks: List[IdentityCheck] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def max_rel_error(self) -> float:
        return max((check.rel_error for check in self.checks), default=0.0)

    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(tolerance=self.tolerance, checks=self.checks + other.checks)


def _check(identity: str, lhs: float, rhs: float, tol: float, target: Optional[int] = None) -> IdentityCheck:
    rel = relative_error(lhs, rhs)
    return IdentityCheck(
        identity=identity,
        target=target,
        lhs=float(lhs),
        rhs=float(rhs),
        abs_error=abs(lhs - rhs),
        rel_error=rel,
        passed=rel <= tol,
    )


def hitting_sum(ht: HittingTimes) -> float:
    """sum_j sum_i pi_i E_i T_j (the diagonal is zero, so i != j and all-i forms agree)."""
    return float(ht.pi @ ht.h.sum(axis=1))


def verify_decomposition(
    g: Graph,
    tol: float = 1e-8,
    rm: Optional[ResistanceMatrix] = None,
    spectrum: Optional[SpectralData] = None,
) -> VerificationReport:
    """
    R+ = N/(2|E|) R* + sum_j sum_{i != j} pi_i E_i T_j, and the spectral form
    R+ = N sum_{k>=2} 1/(1 - lambda_k) + sum_j sum_i pi_i E_i T_j.
    """
    rm = rm if rm is not None else effective_resistances(g)
    spectrum = spectrum if spectrum is not None else transition_spectrum(g)
    ht = hitting_times(g, rm)

    r_plus = additive_index(g, rm)
    walk = hitting_sum(ht)
    resistance_form = g.n / (2.0 * g.m) * multiplicative_index(g, rm) + walk
    spectral_form = g.n * spectral_resolvent_sum(spectrum) + walk
    return VerificationReport(
        tolerance=tol,
        checks=[
            _check("decomposition", r_plus, resistance_form, tol),
            _check("decomposition_spectral", r_plus, spectral_form, tol),
        ],
    )


def verify_hitting_spectral(
    g: Graph,
    tol: float = 1e-7,
    rm: Optional[ResistanceMatrix] = None,
    spectrum: Optional[SpectralData] = None,
) -> VerificationReport:
    """
    For every target j: sum_i pi_i E_i T_j = (1/pi_j) sum_{k>=2} v_kj^2 / (1 - lambda_k),
    together with the normalization sum_{k>=2} v_kj^2 = 1 - pi_j.
    """
    rm = rm if rm is not None else effective_resistances(g)
    spectrum = spectrum if spectrum is not None else transition_spectrum(g)
    ht = hitting_times(g, rm)

    lhs = ht.pi @ ht.h
    tail = spectrum.v[:, 1:] ** 2
    rhs = (tail @ (1.0 / (1.0 - spectrum.lambdas[1:]))) / spectrum.pi
    norms = tail.sum(axis=1)

    checks = []
    for j in range(g.n):
        checks.append(_check("hitting_spectral", lhs[j], rhs[j], tol, target=j))
        checks.append(_check("eigenvector_normalization", norms[j], 1.0 - spectrum.pi[j], tol, target=j))
    return VerificationReport(tolerance=tol, checks=checks)


def verify_all(
    g: Graph,
    tol: float = 1e-8,
    rm: Optional[ResistanceMatrix] = None,
    spectrum: Optional[SpectralData] = None,
) -> VerificationReport:
    """Every identity the toolkit relies on, each at relative tolerance `tol`."""
    rm = rm if rm is not None else effective_resistances(g)
    spectrum = spectrum if spectrum is not None else transition_spectrum(g)
    ht = hitting_times(g, rm)

    two_m_r = 2.0 * g.m * rm.r
    commute_scale = max(1.0, float(np.max(np.abs(two_m_r))))
    commute = commute_identity_residual(g, rm, ht)

    bipartite = is_bipartite(g)
    lambda_min = float(spectrum.lambdas[-1])
    spectral_bipartite = abs(lambda_min + 1.0) <= 1e-9
    consistent = bipartite == spectral_bipartite
    bipartite_check = IdentityCheck(
        identity="bipartite_spectrum",
        lhs=float(bipartite),
        rhs=float(spectral_bipartite),
        abs_error=abs(lambda_min + 1.0),
        rel_error=0.0 if consistent else 1.0,
        passed=consistent,
    )

    floor_misses = len(resistance_floor_violations(g, rm))
    floor_check = IdentityCheck(
        identity="resistance_floors",
        lhs=float(floor_misses),
        rhs=0.0,
        abs_error=float(floor_misses),
        rel_error=0.0 if not floor_misses else 1.0,
        passed=not floor_misses,
    )

    report = VerificationReport(
        tolerance=tol,
        checks=[
            IdentityCheck(
                identity="commute_time",
                lhs=commute,
                rhs=0.0,
                abs_error=commute,
                rel_error=commute / commute_scale,
                passed=commute / commute_scale <= tol,
            ),
            _check("multiplicative_spectral", multiplicative_index(g, rm), multiplicative_index_spectral(g, spectrum), tol),
            bipartite_check,
            floor_check,
        ],
    )
    report = report.extend(verify_decomposition(g, tol, rm=rm, spectrum=spectrum))
    return report.extend(verify_hitting_spectral(g, tol, rm=rm, spectrum=spectrum))
