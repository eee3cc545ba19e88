"""
Published table values (data/published_tables.yaml) and their reproduction.

Row status:
  - match: integer entries equal exactly; decimal entries equal after
    rounding the computed value to the printed number of places.
  - tolerance-match: within max(rel_tol * |printed|, abs_tol).
  - flagged: known-unreproducible entry; reported, never fails.
  - failed: anything else.
"""
import math
from pathlib import Path
from typing import Callable, Dict, List, Optional

import yaml
from pydantic import BaseModel, ValidationError

from core.bounds import formulas
from core.bounds.catalog import BoundCatalog
from core.errors import TableDataError
from core.graph.models import Graph
from core.graph.properties import degree_sequence
from core.report.models import GraphSummary, RowStatus, TableReproduction, TableRow

EXACT_TOL = 1e-9


class PublishedRow(BaseModel):
    bound: str
    label: str
    published: float
    places: int = 0
    flagged: bool = False
    note: Optional[str] = None
    cross_check: Optional[str] = None
    printed_sigma: Optional[float] = None


class PublishedTable(BaseModel):
    table: int
    family: str
    caption: str = ""
    rows: List[PublishedRow]


def load_published_tables(path: Path) -> Dict[int, PublishedTable]:
    try:
        raw = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        tables = [PublishedTable(**entry) for entry in raw["tables"]]
    except FileNotFoundError as e:
        raise TableDataError(f"published table values not found at {path}") from e
    except (yaml.YAMLError, KeyError, TypeError, ValidationError) as e:
        raise TableDataError(f"malformed table data in {path}: {e}") from e
    return {t.table: t for t in tables}


def select_tables(selector: str, available: Dict[int, PublishedTable]) -> List[int]:
    """'all' or a single table number."""
    selector = str(selector).strip().lower()
    if selector == "all":
        return sorted(available)
    try:
        number = int(selector)
    except ValueError as e:
        raise TableDataError(f"table selector must be a number or 'all', got {selector!r}") from e
    if number not in available:
        raise TableDataError(f"no published table {number} (known: {sorted(available)})")
    return [number]


def row_status(
    computed: Optional[float],
    published: float,
    places: int,
    flagged: bool = False,
    rel_tol: float = 0.001,
    abs_tol: float = 0.02,
) -> RowStatus:
    if flagged:
        return "flagged"
    if computed is None or not math.isfinite(computed):
        return "failed"
    if places == 0:
        return "match" if abs(computed - published) <= EXACT_TOL * max(1.0, abs(published)) else "failed"
    if abs(round(computed, places) - published) <= EXACT_TOL * max(1.0, abs(published)):
        return "match"
    if abs(computed - published) <= max(rel_tol * abs(published), abs_tol):
        return "tolerance-match"
    return "failed"


# --- cross checks: recomputations from printed inputs or closed forms -------

def _printed_sigma(g: Graph, row: PublishedRow, computed: Optional[float]) -> str:
    alt = formulas.lb_sigma(g.n, row.printed_sigma)
    return f"sigma^2 = tr(P^2)/N gives {computed:.4f}; the printed sigma {row.printed_sigma} gives {alt:.3f}"


def _semiregular_h(g: Graph, row: PublishedRow, computed: Optional[float]) -> str:
    histogram = degree_sequence(g).histogram()
    direct = formulas.ratio_invariants(degree_sequence(g).degrees).h
    if len(histogram) != 2:
        return f"H = {direct:.4f} by direct sum"
    (a, n1), (b, n2) = sorted(histogram.items())
    closed = formulas.semiregular_h(n1, a, n2, b)
    return f"H = {direct:.4f} by direct sum, {float(closed):.4f} by the semiregular closed form; bound = {computed:.4f}"


def _sun_closed_form(g: Graph, row: PublishedRow, computed: Optional[float]) -> str:
    closed = formulas.sun_mindeg_bound(g.n) if row.bound == "LB-14" else formulas.sun_major_bound(g.n)
    return f"closed form for sun({g.n}) gives {float(closed):.4f}"


def _binary_tree_h(g: Graph, row: PublishedRow, computed: Optional[float]) -> str:
    depth = int(round(math.log2(g.n + 1))) - 1
    direct = formulas.ratio_invariants(degree_sequence(g).degrees).h
    printed = formulas.full_binary_tree_h_printed(depth)
    return (
        f"direct H = {direct:g} gives {formulas.lb_major_h(g.n, direct):.3f}; "
        f"printed closed form H = {float(printed):g} gives {formulas.lb_major_h(g.n, float(printed)):.3f}"
    )


CROSS_CHECKS: Dict[str, Callable[[Graph, PublishedRow, Optional[float]], str]] = {
    "printed_sigma": _printed_sigma,
    "semiregular_h": _semiregular_h,
    "sun_closed_form": _sun_closed_form,
    "binary_tree_h": _binary_tree_h,
}


def _note(g: Graph, row: PublishedRow, computed: Optional[float]) -> Optional[str]:
    parts = [row.note] if row.note else []
    if row.cross_check and computed is not None:
        if row.cross_check not in CROSS_CHECKS:
            raise TableDataError(f"unknown cross check {row.cross_check!r}")
        parts.append(CROSS_CHECKS[row.cross_check](g, row, computed))
    return "; ".join(parts) or None


def reproduce_table(
    table: PublishedTable,
    g: Graph,
    catalog: BoundCatalog,
    rel_tol: float = 0.001,
    abs_tol: float = 0.02,
) -> TableReproduction:
    rows = []
    for row in table.rows:
        result = catalog.get(row.bound)
        computed = result.value if result.applicable else None
        rows.append(
            TableRow(
                bound_id=row.bound,
                label=row.label,
                computed=computed,
                published=row.published,
                places=row.places,
                status=row_status(computed, row.published, row.places, row.flagged, rel_tol, abs_tol),
                note=_note(g, row, computed),
            )
        )
    return TableReproduction(
        table=table.table,
        family=table.family,
        caption=table.caption,
        graph=GraphSummary.of(g, table.family),
        rows=rows,
    )
