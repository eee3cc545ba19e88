from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, computed_field

from core.bounds.catalog import BoundCatalog
from core.graph.models import Graph
from core.graph.properties import (
    degree_sequence,
    diameter,
    is_bipartite,
    is_distance_regular,
    is_regular,
    is_tree,
)
from core.indices.identities import VerificationReport
from core.indices.kirchhoff import IndexValues

RowStatus = Literal["match", "tolerance-match", "flagged", "failed"]


class GraphSummary(BaseModel):
    label: str
    n: int
    m: int
    diameter: int
    degree_histogram: Dict[int, int]
    is_tree: bool
    is_bipartite: bool
    is_regular: bool
    is_distance_regular: bool

    @classmethod
    def of(cls, g: Graph, label: str) -> "GraphSummary":
        return cls(
            label=label,
            n=g.n,
            m=g.m,
            diameter=diameter(g),
            degree_histogram=degree_sequence(g).histogram(),
            is_tree=is_tree(g),
            is_bipartite=is_bipartite(g),
            is_regular=is_regular(g),
            is_distance_regular=is_distance_regular(g),
        )


class TableRow(BaseModel):
    """One printed bound value set against the value computed here."""
    bound_id: str
    label: str
    computed: Optional[float] = None
    published: float
    places: int
    status: RowStatus
    note: Optional[str] = None


class TableReproduction(BaseModel):
    table: int
    family: str
    caption: str
    graph: GraphSummary
    rows: List[TableRow]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.status != "failed" for row in self.rows)


class ComparisonRow(BaseModel):
    label: str
    n: int
    m: int
    r_plus: float
    best_lower_id: Optional[str] = None
    best_lower: Optional[float] = None
    best_upper_id: Optional[str] = None
    best_upper: Optional[float] = None


class Report(BaseModel):
    graph: Optional[GraphSummary] = None
    indices: Optional[IndexValues] = None
    bounds: Optional[BoundCatalog] = None
    verification: Optional[VerificationReport] = None
    tables: List[TableReproduction] = []
    comparison: List[ComparisonRow] = []

    @computed_field
    @property
    def passed(self) -> bool:
        """False when an identity check or a non-flagged table row failed."""
        if self.verification is not None and not self.verification.passed:
            return False
        return all(table.passed for table in self.tables)
