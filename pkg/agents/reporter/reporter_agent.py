from typing import Iterable, Optional
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.bounds.catalog import BoundCatalog
from core.graph.models import Graph
from core.indices.identities import VerificationReport
from core.indices.kirchhoff import IndexValues
from core.report.models import GraphSummary, Report

class ReporterAgent(BaseAgent):
    """
    Joins the parallel branches into one Report, keeping only the sections
    that were requested.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)

    async def run(
        self,
        graph: Graph,
        label: str,
        tasks: Iterable[str],
        indices: Optional[IndexValues] = None,
        bounds: Optional[BoundCatalog] = None,
        verification: Optional[VerificationReport] = None,
    ) -> Report:
        tasks = set(tasks)
        self.log(f"📝 ReporterAgent assembling report for {label} ({', '.join(sorted(tasks))})")
        return Report(
            graph=GraphSummary.of(graph, label),
            indices=indices if "exact" in tasks else None,
            bounds=bounds if "bounds" in tasks else None,
            verification=verification if "verify" in tasks else None,
        )
