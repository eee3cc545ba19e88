"""
Edge-list text format.

    # optional comment lines
    N M
    u v        (exactly M lines, 0 <= u, v < N, either order)

The writer emits edges in lexicographic order, so from_edge_list and
to_edge_list are mutually inverse on the edge set.
"""
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from core.errors import EdgeListParseError
from core.graph.models import Graph


def _content_lines(text: Union[str, Iterable[str]]) -> List[Tuple[int, str]]:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    kept = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        kept.append((number, stripped))
    return kept


def _parse_pair(number: int, line: str) -> Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise EdgeListParseError(f"line {number}: expected two integers, got {line!r}")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError as e:
        raise EdgeListParseError(f"line {number}: non-integer field in {line!r}") from e


def from_edge_list(text: Union[str, Iterable[str]]) -> Graph:
    """Parses edge-list text into a validated Graph (validation errors propagate)."""
    lines = _content_lines(text)
    if not lines:
        raise EdgeListParseError("empty edge list: missing 'N M' header")
    header_number, header = lines[0]
    n, m = _parse_pair(header_number, header)
    if m < 0:
        raise EdgeListParseError(f"line {header_number}: negative edge count {m}")
    body = lines[1:]
    if len(body) != m:
        raise EdgeListParseError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = [_parse_pair(number, line) for number, line in body]
    return Graph(n=n, edges=tuple(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: Path) -> Graph:
    return from_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path: Path, comment: str = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = f"# {comment}\n" if comment else ""
    path.write_text(header + to_edge_list(g), encoding="utf-8")
    return path
