from typing import TypedDict, List, Optional
from pathlib import Path

from core.bounds.catalog import BoundCatalog
from core.graph.models import Graph
from core.indices.identities import VerificationReport
from core.indices.kirchhoff import IndexValues
from core.indices.resistance import ResistanceMatrix
from core.report.models import Report
from core.spectral.linalg import SpectralData

class AnalysisState(TypedDict, total=False):
    """
    This is the basket that carries one graph's data through the graph.
    """
    # --- Input (exactly one source) ---
    file_path: Optional[Path]
    text: Optional[str]
    family: Optional[str]
    tasks: List[str]          # subset of "exact", "bounds", "verify"
    tol: float

    # --- Load & exact stage ---
    graph: Graph
    label: str
    resistances: ResistanceMatrix
    spectrum: SpectralData
    indices: IndexValues

    # --- Parallel outputs ---
    bounds: BoundCatalog
    verification: VerificationReport

    # --- Join ---
    report: Report
