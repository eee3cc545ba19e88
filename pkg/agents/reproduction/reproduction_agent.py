from typing import Dict, List
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.bounds.catalog import BoundCatalog
from core.errors import TableDataError
from core.graph.models import Graph
from core.report.models import TableReproduction
from core.report.tables import PublishedTable, load_published_tables, reproduce_table, select_tables

class ReproductionAgent(BaseAgent):
    """
    Sets computed bounds against the published table values and gives each
    row its match / tolerance-match / flagged / failed status.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)
        self.tables_path = settings.PUBLISHED_TABLES_PATH
        self.rel_tol = settings.DECIMAL_REL_TOL
        self.abs_tol = settings.DECIMAL_ABS_TOL
        self._tables: Dict[int, PublishedTable] = {}

    def tables(self) -> Dict[int, PublishedTable]:
        if not self._tables:
            self._tables = load_published_tables(self.tables_path)
        return self._tables

    def select(self, selector: str) -> List[PublishedTable]:
        try:
            available = self.tables()
            return [available[number] for number in select_tables(selector, available)]
        except TableDataError as e:
            self.log(f"   ❌ ERROR: {e}")
            raise

    async def run(self, table: PublishedTable, graph: Graph, catalog: BoundCatalog) -> TableReproduction:
        self.log(f"📊 ReproductionAgent checking table {table.table} ({table.family})")
        reproduction = reproduce_table(table, graph, catalog, self.rel_tol, self.abs_tol)
        for row in reproduction.rows:
            marker = "❌" if row.status == "failed" else "✅"
            self.log(f"   {marker} {row.bound_id} {row.label}: computed {row.computed} vs {row.published} -> {row.status}")
        return reproduction
