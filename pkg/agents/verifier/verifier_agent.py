from typing import Optional
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.graph.models import Graph
from core.indices.identities import VerificationReport, verify_all
from core.indices.resistance import ResistanceMatrix
from core.spectral.linalg import SpectralData

class VerifierAgent(BaseAgent):
    """
    Checks the exact identities (decomposition, per-vertex hitting-time
    identity, commute times, spectral R*) and reports every residual.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)
        self.default_tol = settings.VERIFY_TOL

    async def run(
        self,
        graph: Graph,
        tol: Optional[float] = None,
        resistances: Optional[ResistanceMatrix] = None,
        spectrum: Optional[SpectralData] = None,
    ) -> VerificationReport:
        tol = tol if tol is not None else self.default_tol
        self.log(f"🔎 VerifierAgent checking identities at tolerance {tol:g}")
        report = verify_all(graph, tol, rm=resistances, spectrum=spectrum)
        if report.passed:
            self.log(f"   All {len(report.checks)} checks passed (max relative error {report.max_rel_error:.3g}).")
        else:
            for check in report.failures():
                self.log(f"   ❌ ERROR: {check.identity} (target {check.target}) relative error {check.rel_error:.3g}")
        return report
