from typing import Union
from agents.base_agent import BaseAgent
from config.settings import Settings
from core.errors import InfeasibleFamilyError
from core.graph.generators import generate
from core.graph.models import FamilySpec, Graph

class GeneratorAgent(BaseAgent):
    """
    Builds a family graph from a FamilySpec or its 'name:k=v,...' text form.
    """
    def __init__(self, settings: Settings):
        super().__init__(settings)

    async def run(self, spec: Union[FamilySpec, str]) -> Graph:
        try:
            if isinstance(spec, str):
                spec = FamilySpec.parse(spec)
            self.log(f"🏗️ GeneratorAgent building {spec.label}")
            graph = generate(spec)
            self.log(f"   Generated {graph.n} vertices, {graph.m} edges.")
            return graph
        except InfeasibleFamilyError as e:
            self.log(f"   ❌ ERROR: infeasible family: {e}")
            raise
