from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from core.graph.models import DegreeSequence, Graph


def degree_sequence(g: Graph) -> DegreeSequence:
    degrees = tuple(sorted(int(d) for d in g.degrees))
    harmonic = sum((Fraction(1, d) for d in degrees), Fraction(0))
    return DegreeSequence(
        degrees=degrees,
        m_leaves=sum(1 for d in degrees if d == 1),
        min_degree=degrees[0],
        harmonic_sum=float(harmonic),
    )


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths by BFS from every vertex."""
    dist = np.zeros((g.n, g.n), dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            dist[source, target] = length
    return dist


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())


def is_tree(g: Graph) -> bool:
    # connectivity is a Graph invariant
    return g.m == g.n - 1


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(g.to_networkx())


def is_regular(g: Graph) -> bool:
    return bool(np.all(g.degrees == g.degrees[0]))


def intersection_array(g: Graph) -> Optional[Tuple[List[int], List[int]]]:
    """
    Returns (b, c) with b[i] = neighbors one step farther and c[i] = neighbors
    one step closer for any pair at distance i, or None when these numbers
    depend on the pair (the graph is not distance-regular).

    Checked by direct enumeration over every ordered pair of the distance matrix.
    """
    if not is_regular(g):
        return None
    dist = distance_matrix(g)
    diam = int(dist.max())
    b: List[Optional[int]] = [None] * (diam + 1)
    c: List[Optional[int]] = [None] * (diam + 1)
    for u in range(g.n):
        row = dist[u]
        for v in range(g.n):
            i = int(row[v])
            nbr_dist = row[list(g.adjacency[v])]
            farther = int(np.count_nonzero(nbr_dist == i + 1))
            closer = int(np.count_nonzero(nbr_dist == i - 1))
            if b[i] is None:
                b[i], c[i] = farther, closer
            elif b[i] != farther or c[i] != closer:
                return None
    return [int(x) for x in b], [int(x) for x in c]


def is_distance_regular(g: Graph) -> bool:
    return intersection_array(g) is not None
