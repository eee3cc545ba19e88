"""
The bound catalog: every closed-form bound evaluated on one graph, with its
applicability verdict, plus the best lower and upper bound among those that
apply. Ids follow the catalog numbering; UB-DR sorts
between UB-26 and UB-29.
"""
import math
from fractions import Fraction
from typing import Callable, Dict, List, Literal, Optional

from pydantic import BaseModel

from core.bounds import formulas
from core.errors import InapplicableBoundError
from core.graph.models import Graph
from core.graph.properties import degree_sequence, diameter, is_bipartite, is_distance_regular, is_tree
from core.indices.resistance import ResistanceMatrix, effective_resistances
from core.spectral.linalg import SpectralData, transition_spectrum

BoundKind = Literal["lower", "upper"]

DEGREES = "degrees-only"
RESISTANCES = "resistances"
SPECTRUM = "spectrum"
STRUCTURE = "structure"

ORDER: Dict[str, float] = {
    "LB-3": 3,
    "LB-6": 6,
    "LB-8": 8,
    "LB-10": 10,
    "LB-11": 11,
    "LB-14": 14,
    "LB-15": 15,
    "LB-16": 16,
    "LB-19": 19,
    "LB-22": 22,
    "LB-24": 24,
    "UB-25": 25,
    "UB-26": 26,
    "UB-DR": 26.5,
    "UB-29": 29,
    "UB-30": 30,
}
REFERENCE_ID = "UB-REF"
TIE_TOL = 1e-9


class BoundResult(BaseModel):
    id: str
    kind: BoundKind
    value: Optional[float] = None
    applicable: bool
    reason: Optional[str] = None
    needs: List[str]
    exact: Optional[str] = None


class BoundCatalog(BaseModel):
    results: List[BoundResult]
    best_lower: Optional[BoundResult] = None
    best_upper: Optional[BoundResult] = None
    reference_upper: Optional[BoundResult] = None

    def get(self, bound_id: str) -> BoundResult:
        for result in self.results:
            if result.id == bound_id:
                return result
        raise KeyError(bound_id)

    def applicable(self, kind: Optional[BoundKind] = None) -> List[BoundResult]:
        return [r for r in self.results if r.applicable and (kind is None or r.kind == kind)]


def _evaluate(bound_id: str, kind: BoundKind, needs: List[str], compute: Callable[[], formulas.Number]) -> BoundResult:
    try:
        raw = compute()
    except InapplicableBoundError as e:
        return BoundResult(id=bound_id, kind=kind, applicable=False, reason=str(e), needs=sorted(needs))
    value = float(raw)
    if not math.isfinite(value):
        return BoundResult(id=bound_id, kind=kind, applicable=False, reason="non-finite value", needs=sorted(needs))
    exact = str(raw) if isinstance(raw, (int, Fraction)) else None
    return BoundResult(id=bound_id, kind=kind, value=value, applicable=True, needs=sorted(needs), exact=exact)


def _is_tie(a: float, b: float) -> bool:
    return abs(a - b) <= TIE_TOL * max(1.0, abs(a), abs(b))


def _best(results: List[BoundResult], kind: BoundKind) -> Optional[BoundResult]:
    """argmax for lower bounds, argmin for upper bounds; the lowest catalog number wins ties."""
    best = None
    for result in sorted(results, key=lambda r: ORDER[r.id]):
        if not result.applicable or result.kind != kind:
            continue
        if best is None:
            best = result
            continue
        if _is_tie(result.value, best.value):
            continue
        better = result.value > best.value if kind == "lower" else result.value < best.value
        if better:
            best = result
    return best


def _when(condition: bool, reason: str) -> None:
    if not condition:
        raise InapplicableBoundError(reason)


def evaluate_all(
    g: Graph,
    resistances: Optional[ResistanceMatrix] = None,
    spectrum: Optional[SpectralData] = None,
) -> BoundCatalog:
    """One BoundResult per catalog entry; missing resistances or spectrum are computed here."""
    rm = resistances if resistances is not None else effective_resistances(g)
    spectral = spectrum if spectrum is not None else transition_spectrum(g)
    ds = degree_sequence(g)
    n, m_edges, m_leaves, d1 = g.n, g.m, ds.m_leaves, ds.min_degree
    harmonic = ds.harmonic_sum_exact
    ratios = formulas.ratio_invariants(ds.degrees)
    tree = is_tree(g)
    bipartite = is_bipartite(g)

    def tree_only(compute):
        def run():
            _when(tree, "not a tree")
            return compute()
        return run

    def distance_regular():
        _when(is_distance_regular(g), "not distance-regular")
        return formulas.ub_distance_regular(n, d1)

    def bipartite_spectral():
        _when(bipartite, "not bipartite")
        return formulas.ub_spectral_bipartite(n, m_edges, harmonic, spectral.lambda2, spectral.k_param, spectral.theta)

    entries = [
        ("LB-3", "lower", [DEGREES], lambda: formulas.lb_universal(n)),
        ("LB-6", "lower", [DEGREES], lambda: formulas.lb_degree_harmonic(n, m_edges, harmonic)),
        ("LB-8", "lower", [DEGREES], lambda: formulas.lb_leaves(n, m_edges, m_leaves)),
        ("LB-10", "lower", [DEGREES, STRUCTURE], tree_only(lambda: formulas.lb_leaves_tree(n, m_leaves))),
        ("LB-11", "lower", [DEGREES], lambda: formulas.lb_mindeg_full(n, m_edges, harmonic, d1)),
        ("LB-14", "lower", [DEGREES], lambda: formulas.lb_mindeg(n, m_edges, d1)),
        ("LB-15", "lower", [DEGREES], lambda: formulas.lb_leaves_v2(n, m_edges, m_leaves)),
        ("LB-16", "lower", [DEGREES, STRUCTURE], tree_only(lambda: formulas.lb_leaves_tree_v2(n, m_leaves))),
        ("LB-19", "lower", [DEGREES], lambda: formulas.lb_major_h(n, ratios.h)),
        ("LB-22", "lower", [DEGREES], lambda: formulas.lb_major_hstar(n, ratios.h_star)),
        ("LB-24", "lower", [SPECTRUM], lambda: formulas.lb_sigma(n, spectral.sigma)),
        ("UB-25", "upper", [RESISTANCES], lambda: formulas.ub_resistance(n, m_edges, rm.r_max)),
        ("UB-26", "upper", [STRUCTURE], tree_only(lambda: formulas.ub_tree(n, diameter(g)))),
        ("UB-DR", "upper", [STRUCTURE], distance_regular),
        ("UB-29", "upper", [DEGREES, SPECTRUM],
         lambda: formulas.ub_spectral(n, m_edges, harmonic, spectral.lambda2, spectral.k_param, spectral.theta)),
        ("UB-30", "upper", [DEGREES, SPECTRUM, STRUCTURE], bipartite_spectral),
    ]
    results = [_evaluate(bound_id, kind, needs, compute) for bound_id, kind, needs, compute in entries]
    results.sort(key=lambda r: ORDER[r.id])

    return BoundCatalog(
        results=results,
        best_lower=_best(results, "lower"),
        best_upper=_best(results, "upper"),
        reference_upper=_evaluate(REFERENCE_ID, "upper", [DEGREES], lambda: formulas.ub_reference(n)),
    )


def sandwich_violations(catalog: BoundCatalog, r_plus: float, slack: float = 1e-6) -> List[str]:
    """Ids of applicable bounds that land on the wrong side of the exact R+."""
    violations = []
    for result in catalog.applicable():
        if result.kind == "lower" and result.value > r_plus + slack * max(1.0, abs(r_plus)):
            violations.append(result.id)
        if result.kind == "upper" and result.value < r_plus - slack * max(1.0, abs(r_plus)):
            violations.append(result.id)
    return violations
