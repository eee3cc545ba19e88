"""
Generators for every graph family used in the bound comparisons.

Vertex numbering per family:
  - sun(n): clique vertices 0..n/2-1, cycle vertices n/2..n-1; cycle vertex
    n/2+i is joined to clique vertex i.
  - full_binary_tree(d) / leaf_path_tree(d): heap order (children of i are
    2i+1, 2i+2); leaves are the last 2^d vertices, left to right, and
    leaf_path_tree joins consecutive leaves by a path.
  - biregular_bipartite(n1, a, n2, b): side A is 0..n1-1, side B is
    n1..n1+n2-1; A-vertex i meets B-vertices (i*a + t) mod n2, t < a.
  - barbell_thirds(n): two K_{n/3} joined by a path of n/3 edges whose
    n/3 - 1 interior vertices are new, so the graph has n - 1 vertices.
  - lollipop(n): K_{n-1} on 0..n-2 with vertex n-1 pendant on n-2.
"""
from typing import Callable, Dict

import networkx as nx

from core.errors import GraphValidationError, InfeasibleFamilyError
from core.graph.models import FamilySpec, Graph


def _sun(spec: FamilySpec) -> nx.Graph:
    half = spec.n // 2
    g = nx.complete_graph(half)
    cycle = [half + i for i in range(half)]
    nx.add_cycle(g, cycle)
    g.add_edges_from((i, half + i) for i in range(half))
    return g


def _biregular_bipartite(spec: FamilySpec) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(spec.n1 + spec.n2))
    for i in range(spec.n1):
        for t in range(spec.a):
            g.add_edge(i, spec.n1 + (i * spec.a + t) % spec.n2)
    return g


def _leaf_path_tree(spec: FamilySpec) -> nx.Graph:
    g = nx.balanced_tree(2, spec.depth)
    first_leaf = 2 ** spec.depth - 1
    leaves = list(range(first_leaf, 2 * first_leaf + 1))
    nx.add_path(g, leaves)
    return g


def _barbell_thirds(spec: FamilySpec) -> nx.Graph:
    third = spec.n // 3
    # networkx counts path *vertices*; third - 1 of them give third edges
    return nx.barbell_graph(third, third - 1)


_BUILDERS: Dict[str, Callable[[FamilySpec], nx.Graph]] = {
    "complete": lambda s: nx.complete_graph(s.n),
    "path": lambda s: nx.path_graph(s.n),
    "cycle": lambda s: nx.cycle_graph(s.n),
    "star": lambda s: nx.star_graph(s.n - 1),
    "complete_bipartite": lambda s: nx.complete_bipartite_graph(s.r, s.s),
    "circulant": lambda s: nx.circulant_graph(s.n, list(s.offsets)),
    "biregular_bipartite": _biregular_bipartite,
    "sun": _sun,
    "full_binary_tree": lambda s: nx.balanced_tree(2, s.depth),
    "leaf_path_tree": _leaf_path_tree,
    "lollipop": lambda s: nx.lollipop_graph(s.n - 1, 1),
    "barbell_thirds": _barbell_thirds,
    "petersen": lambda s: nx.petersen_graph(),
}


def generate(spec: FamilySpec) -> Graph:
    """Builds the family graph; a spec whose realization is disconnected is infeasible."""
    try:
        return Graph.from_networkx(_BUILDERS[spec.family](spec))
    except GraphValidationError as e:
        raise InfeasibleFamilyError(f"{spec.label}: {e}") from e
