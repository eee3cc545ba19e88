"""
Report rendering: tsv (default), json and markdown. Output depends only on
the report contents, so identical inputs give byte-identical text.
"""
from typing import Callable, Dict, List, Optional, Tuple

from core.report.models import Report

Section = Tuple[str, List[str], List[List[str]]]


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _sections(report: Report) -> List[Section]:
    sections: List[Section] = []
    if report.graph is not None:
        s = report.graph
        histogram = " ".join(f"{d}:{c}" for d, c in sorted(s.degree_histogram.items()))
        sections.append((
            "graph",
            ["graph", "n", "m", "diameter", "degrees", "tree", "bipartite", "regular", "distance_regular"],
            [[s.label, s.n, s.m, s.diameter, histogram, s.is_tree, s.is_bipartite, s.is_regular, s.is_distance_regular]],
        ))
    if report.indices is not None:
        sections.append((
            "indices",
            ["index", "value"],
            [["R", report.indices.r], ["R*", report.indices.r_star], ["R+", report.indices.r_plus]],
        ))
    if report.bounds is not None:
        catalog = report.bounds
        rows = [
            [r.id, r.kind, r.applicable, r.value, r.exact, ",".join(r.needs), r.reason]
            for r in catalog.results
        ]
        for name, r in (("best_lower", catalog.best_lower), ("best_upper", catalog.best_upper), ("reference", catalog.reference_upper)):
            if r is not None:
                rows.append([name, r.kind, r.applicable, r.value, r.exact, r.id, r.reason])
        sections.append(("bounds", ["bound", "kind", "applicable", "value", "exact", "needs", "reason"], rows))
    if report.verification is not None:
        v = report.verification
        rows = [[c.identity, c.target, c.lhs, c.rhs, c.rel_error, c.passed] for c in v.checks]
        rows.append(["all", None, None, None, v.max_rel_error, v.passed])
        sections.append(("verification", ["identity", "target", "lhs", "rhs", "rel_error", "passed"], rows))
    if report.tables:
        rows = [
            [t.table, row.bound_id, row.label, row.computed, row.published, row.status, row.note]
            for t in report.tables
            for row in t.rows
        ]
        sections.append(("tables", ["table", "bound", "label", "computed", "published", "status", "note"], rows))
    if report.comparison:
        rows = [
            [c.label, c.n, c.m, c.r_plus, c.best_lower_id, c.best_lower, c.best_upper_id, c.best_upper]
            for c in report.comparison
        ]
        sections.append((
            "comparison",
            ["graph", "n", "m", "r_plus", "best_lower_id", "best_lower", "best_upper_id", "best_upper"],
            rows,
        ))
    return [(title, header, [[_fmt(v) for v in row] for row in rows]) for title, header, rows in sections]


def render_tsv(report: Report) -> str:
    blocks = []
    for _, header, rows in _sections(report):
        lines = ["\t".join(header)] + ["\t".join(row) for row in rows]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_markdown(report: Report) -> str:
    blocks = []
    for title, header, rows in _sections(report):
        lines = [f"## {title}", "", "| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(cell.replace("|", "\\|") for cell in row) + " |" for row in rows]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


RENDERERS: Dict[str, Callable[[Report], str]] = {
    "tsv": render_tsv,
    "json": render_json,
    "markdown": render_markdown,
}


def render(report: Report, fmt: Optional[str] = "tsv") -> str:
    renderer = RENDERERS.get(fmt or "tsv")
    if renderer is None:
        raise ValueError(f"unknown output format {fmt!r}; choose from {sorted(RENDERERS)}")
    return renderer(report)
