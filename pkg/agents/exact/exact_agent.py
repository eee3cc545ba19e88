from typing import Any, Dict
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.errors import KirchhoffError
from core.graph.models import Graph
from core.indices.kirchhoff import index_values
from core.indices.resistance import effective_resistances
from core.spectral.linalg import transition_spectrum

class ExactAgent(BaseAgent):
    """
    Computes the exact quantities every later stage shares: effective
    resistances, the transition spectrum and the three Kirchhoff indices.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)
        self.cutoff = settings.ZERO_EIGENVALUE_CUTOFF
        self.snap = settings.FLOOR_SNAP

    async def run(self, graph: Graph) -> Dict[str, Any]:
        self.log(f"🧮 ExactAgent computing resistances and spectrum for N={graph.n}, |E|={graph.m}")
        try:
            resistances = effective_resistances(graph, cutoff=self.cutoff)
            spectrum = transition_spectrum(graph, snap=self.snap)
            indices = index_values(graph, resistances)
        except KirchhoffError as e:
            self.log(f"   ❌ ERROR: exact computation failed: {e}")
            raise
        self.log(f"   R+ = {indices.r_plus:.6f}, lambda_2 = {spectrum.lambda2:.6f}")
        return {"resistances": resistances, "spectrum": spectrum, "indices": indices}
