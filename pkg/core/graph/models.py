from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Literal, Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from core.errors import GraphValidationError, InfeasibleFamilyError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    A simple, undirected, connected graph on vertices 0..n-1.

    Edges are stored once as (min, max) in lexicographic order and the
    adjacency lists are sorted, so iteration order is deterministic.
    Construction validates every invariant; a Graph is immutable afterwards.
    """
    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 2:
            raise GraphValidationError(f"vertex count must be an integer >= 2, got {self.n!r}")
        # a connected graph needs n - 1 edges; checked before any per-vertex allocation
        if len(self.edges) < self.n - 1:
            raise GraphValidationError(
                f"graph is disconnected ({len(self.edges)} edges cannot connect {self.n} vertices)"
            )
        canonical = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={self.n}")
            edge = (min(u, v), max(u, v))
            if edge in canonical:
                raise GraphValidationError(f"duplicate edge {edge}")
            canonical.add(edge)

        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in canonical:
            neighbors[u].append(v)
            neighbors[v].append(u)

        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(nbrs)) for nbrs in neighbors))

        # connectivity: BFS from vertex 0 must reach every vertex
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        if not all(seen):
            missing = seen.count(False)
            raise GraphValidationError(f"graph is disconnected ({missing} vertices unreachable from 0)")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degrees in vertex order (not sorted)."""
        return np.array([len(nbrs) for nbrs in self.adjacency], dtype=np.int64)

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabels nodes to 0..n-1 in sorted node order."""
        relabeled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls(n=relabeled.number_of_nodes(), edges=tuple(relabeled.edges()))


class DegreeSequence(BaseModel):
    """Non-decreasing degree sequence with the leaf count M and the harmonic sum."""
    model_config = ConfigDict(frozen=True)

    degrees: Tuple[int, ...]
    m_leaves: int
    min_degree: int
    harmonic_sum: float

    @property
    def harmonic_sum_exact(self) -> Fraction:
        return sum((Fraction(1, d) for d in self.degrees), Fraction(0))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def histogram(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for d in self.degrees:
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items()))


FamilyName = Literal[
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "circulant",
    "biregular_bipartite",
    "sun",
    "full_binary_tree",
    "leaf_path_tree",
    "lollipop",
    "barbell_thirds",
    "petersen",
]

FAMILY_ALIASES = {
    "biregular": "biregular_bipartite",
    "barbell": "barbell_thirds",
    "bipartite": "complete_bipartite",
    "binary_tree": "full_binary_tree",
}

# parameters each family needs
FAMILY_PARAMETERS: Dict[str, Tuple[str, ...]] = {
    "complete": ("n",),
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "complete_bipartite": ("r", "s"),
    "circulant": ("n", "offsets"),
    "biregular_bipartite": ("n1", "a", "n2", "b"),
    "sun": ("n",),
    "full_binary_tree": ("depth",),
    "leaf_path_tree": ("depth",),
    "lollipop": ("n",),
    "barbell_thirds": ("n",),
    "petersen": (),
}


class FamilySpec(BaseModel):
    """A graph family tag plus its parameters; validated on construction."""
    model_config = ConfigDict(frozen=True)

    family: FamilyName
    n: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    offsets: Optional[Tuple[int, ...]] = None
    n1: Optional[int] = None
    a: Optional[int] = None
    n2: Optional[int] = None
    b: Optional[int] = None
    depth: Optional[int] = None

    @model_validator(mode="before")
    @classmethod
    def _resolve_alias(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("family"), str):
            data = dict(data)
            data["family"] = FAMILY_ALIASES.get(data["family"], data["family"])
        return data

    @model_validator(mode="after")
    def _check_feasible(self) -> "FamilySpec":
        missing = [p for p in FAMILY_PARAMETERS[self.family] if getattr(self, p) is None]
        if missing:
            raise InfeasibleFamilyError(f"{self.family} requires parameter(s): {', '.join(missing)}")
        problem = _feasibility_problem(self)
        if problem:
            raise InfeasibleFamilyError(f"{self.label}: {problem}")
        return self

    @property
    def label(self) -> str:
        params = FAMILY_PARAMETERS[self.family]
        if not params:
            return self.family
        values = []
        for p in params:
            value = getattr(self, p)
            if p == "offsets" and value is not None:
                value = "+".join(str(o) for o in value)
            values.append(f"{p}={value}")
        return f"{self.family}:{','.join(values)}"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parses 'name:k=v,k=v' (offsets as '1+3'), e.g. 'complete_bipartite:r=3,s=4'."""
        name, _, rest = text.strip().partition(":")
        data: Dict[str, Any] = {"family": name.strip()}
        for item in filter(None, (part.strip() for part in rest.split(","))):
            key, sep, value = item.partition("=")
            if not sep:
                raise InfeasibleFamilyError(f"malformed family parameter {item!r} in {text!r}")
            key = key.strip()
            try:
                if key == "offsets":
                    data[key] = tuple(int(o) for o in value.split("+"))
                else:
                    data[key] = int(value)
            except ValueError as e:
                raise InfeasibleFamilyError(f"non-integer value for {key} in {text!r}") from e
        return build_family_spec(data)


def build_family_spec(data: Dict[str, Any]) -> FamilySpec:
    """Builds a FamilySpec, turning pydantic's wrapped errors into InfeasibleFamilyError."""
    try:
        return FamilySpec(**data)
    except ValidationError as e:
        raise InfeasibleFamilyError(str(e)) from e


def _feasibility_problem(spec: FamilySpec) -> Optional[str]:
    f = spec.family
    if f in ("complete", "path") and spec.n < 2:
        return "n must be >= 2"
    if f == "lollipop" and spec.n < 3:
        return "n must be >= 3"
    if f in ("cycle", "star") and spec.n < 3:
        return "n must be >= 3"
    if f == "complete_bipartite" and (spec.r < 1 or spec.s < 1):
        return "r and s must be >= 1"
    if f == "circulant":
        if spec.n < 3:
            return "n must be >= 3"
        if not spec.offsets or any(not 1 <= o <= spec.n // 2 for o in spec.offsets):
            return "offsets must lie in 1..n/2"
        if len(set(spec.offsets)) != len(spec.offsets):
            return "offsets must be distinct"
        if np.gcd.reduce([spec.n, *spec.offsets]) != 1:
            return "offsets do not generate a connected circulant"
    if f == "biregular_bipartite":
        if min(spec.n1, spec.a, spec.n2, spec.b) < 1:
            return "all parameters must be >= 1"
        if spec.n1 * spec.a != spec.n2 * spec.b:
            return "requires n1*a == n2*b"
        if spec.a > spec.n2 or spec.b > spec.n1:
            return "requires a <= n2 and b <= n1"
    if f == "sun" and (spec.n < 8 or spec.n % 2):
        return "n must be even and >= 8"
    if f in ("full_binary_tree", "leaf_path_tree") and spec.depth < 1:
        return "depth must be >= 1"
    if f == "leaf_path_tree" and spec.depth < 2:
        return "depth must be >= 2"
    if f == "barbell_thirds" and (spec.n < 6 or spec.n % 3):
        return "n must be divisible by 3 and >= 6"
    return None
