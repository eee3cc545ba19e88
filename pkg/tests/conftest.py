import random
from dataclasses import dataclass
from pathlib import Path
from typing import List

import networkx as nx
import pytest

from config.settings import settings
from core.bounds.catalog import BoundCatalog, evaluate_all
from core.graph.generators import generate
from core.graph.models import FamilySpec, Graph
from core.indices.kirchhoff import IndexValues, index_values
from core.indices.resistance import ResistanceMatrix, effective_resistances
from core.spectral.linalg import SpectralData, transition_spectrum

FIXTURES = Path(__file__).parent / "fixtures"

FAMILY_CORPUS = (
    [f"complete:n={n}" for n in range(2, 9)]
    + [f"path:n={n}" for n in range(2, 9)]
    + [f"cycle:n={n}" for n in range(3, 9)]
    + [f"star:n={n}" for n in range(3, 9)]
    + ["complete_bipartite:r=1,s=1", "complete_bipartite:r=2,s=3", "complete_bipartite:r=3,s=3", "complete_bipartite:r=4,s=6"]
    + ["circulant:n=8,offsets=1+3", "circulant:n=9,offsets=1+2", "circulant:n=12,offsets=1+5"]
    + ["biregular_bipartite:n1=10,a=4,n2=4,b=10", "biregular_bipartite:n1=6,a=2,n2=3,b=4"]
    + ["sun:n=8", "sun:n=12", "sun:n=20"]
    + [f"full_binary_tree:depth={d}" for d in (1, 2, 3, 4)]
    + ["leaf_path_tree:depth=2", "leaf_path_tree:depth=3", "leaf_path_tree:depth=4"]
    + [f"lollipop:n={n}" for n in (3, 5, 8)]
    + ["barbell_thirds:n=9", "barbell_thirds:n=12"]
    + ["petersen"]
)

RANDOM_CORPUS_SIZE = 200


@dataclass
class Analyzed:
    label: str
    graph: Graph
    resistances: ResistanceMatrix
    spectrum: SpectralData
    indices: IndexValues
    catalog: BoundCatalog


def family(text: str) -> Graph:
    return generate(FamilySpec.parse(text))


def random_connected_graphs(count: int, seed: int, max_n: int = 40) -> List[Graph]:
    """Random Pruefer trees, and G(n, p) graphs made connected by adding such a tree."""
    rng = random.Random(seed)
    graphs = []
    for k in range(count):
        n = rng.randint(3, max_n)
        tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
        if k % 4 == 0:
            graphs.append(Graph.from_networkx(tree))
            continue
        g = nx.gnp_random_graph(n, rng.choice([0.05, 0.1, 0.3, 0.6]), seed=rng.randrange(2 ** 31))
        g.add_edges_from(tree.edges())
        graphs.append(Graph.from_networkx(g))
    return graphs


def analyze(label: str, g: Graph) -> Analyzed:
    rm = effective_resistances(g)
    spectrum = transition_spectrum(g)
    return Analyzed(
        label=label,
        graph=g,
        resistances=rm,
        spectrum=spectrum,
        indices=index_values(g, rm),
        catalog=evaluate_all(g, resistances=rm, spectrum=spectrum),
    )


@pytest.fixture(scope="session")
def family_graphs() -> List[Graph]:
    return [family(text) for text in FAMILY_CORPUS]


@pytest.fixture(scope="session")
def random_graphs() -> List[Graph]:
    return random_connected_graphs(RANDOM_CORPUS_SIZE, settings.RANDOM_SEED)


@pytest.fixture(scope="session")
def corpus(family_graphs, random_graphs) -> List[Analyzed]:
    labeled = list(zip(FAMILY_CORPUS, family_graphs))
    labeled += [(f"random-{k}", g) for k, g in enumerate(random_graphs)]
    return [analyze(label, g) for label, g in labeled]


@pytest.fixture
def petersen_path() -> Path:
    return FIXTURES / "petersen.txt"
