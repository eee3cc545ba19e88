from pathlib import Path
from typing import Optional
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.errors import KirchhoffError
from core.graph.edge_list import from_edge_list
from core.graph.models import Graph

class ParserAgent(BaseAgent):
    """
    Parses an edge-list file (or raw edge-list text) into a validated Graph.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)

    async def run(self, file_path: Optional[Path] = None, text: Optional[str] = None) -> Graph:
        source = Path(file_path).name if file_path is not None else "<text>"
        self.log(f"📜 ParserAgent received: {source}")
        try:
            if text is None:
                text = Path(file_path).read_text(encoding="utf-8")
            graph = from_edge_list(text)
            self.log(f"   Parsed graph with {graph.n} vertices and {graph.m} edges.")
            return graph
        except (KirchhoffError, OSError) as e:
            self.log(f"   ❌ ERROR: could not load {source}: {e}")
            raise
