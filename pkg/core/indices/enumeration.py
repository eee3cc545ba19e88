"""
Brute-force minimum of R+ over all labeled connected graphs on n vertices.

The 2^(n(n-1)/2) edge subsets are split into contiguous partitions; each
partition is reduced to (min value, minimizers) and the partial results are
merged by min with a lexicographic tie-break on the edge tuple, so the
outcome does not depend on how the space was partitioned.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from core.errors import GraphValidationError
from core.graph.models import Edge, Graph
from core.indices.kirchhoff import additive_index
from core.indices.resistance import effective_resistances

TIE_TOL = 1e-9


@dataclass(frozen=True)
class BruteForceResult:
    n: int
    graphs_checked: int
    min_r_plus: float
    argmin: Tuple[Edge, ...]
    minimizers: Tuple[Tuple[Edge, ...], ...]


def _is_tie(a: float, b: float) -> bool:
    return abs(a - b) <= TIE_TOL * max(1.0, abs(a), abs(b))


def _scan(n: int, start: int, stop: int) -> BruteForceResult:
    pairs = list(combinations(range(n), 2))
    best: Optional[float] = None
    minimizers: List[Tuple[Edge, ...]] = []
    checked = 0
    for mask in range(start, stop):
        if bin(mask).count("1") < n - 1:
            continue
        edges = tuple(pairs[k] for k in range(len(pairs)) if mask >> k & 1)
        try:
            g = Graph(n=n, edges=edges)
        except GraphValidationError:
            continue
        checked += 1
        value = additive_index(g, effective_resistances(g))
        if best is None or (value < best and not _is_tie(value, best)):
            best, minimizers = value, [g.edges]
        elif _is_tie(value, best):
            best = min(best, value)
            minimizers.append(g.edges)
    if best is None:
        return BruteForceResult(n=n, graphs_checked=0, min_r_plus=float("inf"), argmin=(), minimizers=())
    minimizers.sort()
    return BruteForceResult(
        n=n,
        graphs_checked=checked,
        min_r_plus=best,
        argmin=minimizers[0],
        minimizers=tuple(minimizers),
    )


def merge_results(parts: List[BruteForceResult]) -> BruteForceResult:
    """Order-insensitive reduction of partial scans."""
    parts = [p for p in parts if p.graphs_checked]
    best = min(p.min_r_plus for p in parts)
    minimizers = sorted(m for p in parts if _is_tie(p.min_r_plus, best) for m in p.minimizers)
    return BruteForceResult(
        n=parts[0].n,
        graphs_checked=sum(p.graphs_checked for p in parts),
        min_r_plus=best,
        argmin=minimizers[0],
        minimizers=tuple(minimizers),
    )


def brute_force_minimum(n: int, partitions: int = 1, workers: int = 1) -> BruteForceResult:
    total = 1 << (n * (n - 1) // 2)
    partitions = max(1, min(partitions, total))
    bounds = [(total * k // partitions, total * (k + 1) // partitions) for k in range(partitions)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, [n] * partitions, *zip(*bounds)))
    else:
        parts = [_scan(n, start, stop) for start, stop in bounds]
    return merge_results(parts)
