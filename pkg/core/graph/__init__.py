from core.graph.edge_list import from_edge_list, read_edge_list, to_edge_list, write_edge_list
from core.graph.generators import generate
from core.graph.models import DegreeSequence, FamilySpec, Graph
from core.graph.properties import (
    degree_sequence,
    diameter,
    distance_matrix,
    intersection_array,
    is_bipartite,
    is_distance_regular,
    is_regular,
    is_tree,
)
