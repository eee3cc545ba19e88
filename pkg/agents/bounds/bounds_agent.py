from typing import Optional
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.bounds.catalog import BoundCatalog, evaluate_all, sandwich_violations
from core.graph.models import Graph
from core.indices.kirchhoff import IndexValues
from core.indices.resistance import ResistanceMatrix
from core.spectral.linalg import SpectralData

class BoundsAgent(BaseAgent):
    """
    Evaluates the whole bound catalog and, when the exact index is known,
    warns about any bound that lands on the wrong side of it.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)
        self.slack = settings.BOUND_SLACK

    async def run(
        self,
        graph: Graph,
        resistances: Optional[ResistanceMatrix] = None,
        spectrum: Optional[SpectralData] = None,
        indices: Optional[IndexValues] = None,
    ) -> BoundCatalog:
        self.log("📐 BoundsAgent evaluating the bound catalog...")
        catalog = evaluate_all(graph, resistances=resistances, spectrum=spectrum)
        applicable = catalog.applicable()
        self.log(f"   {len(applicable)} of {len(catalog.results)} bounds apply.")
        if indices is not None:
            for bound_id in sandwich_violations(catalog, indices.r_plus, self.slack):
                self.log(f"   ⚠️ WARNING: {bound_id} = {catalog.get(bound_id).value} vs R+ = {indices.r_plus}")
        return catalog
