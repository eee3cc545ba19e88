import asyncio
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from agents.reproduction.reproduction_agent import ReproductionAgent
from config.settings import settings
from core.indices.enumeration import BruteForceResult, brute_force_minimum
from core.report.models import ComparisonRow, Report
from orchestrator.graph import app
from orchestrator.state import AnalysisState

ALL_TASKS = ("exact", "bounds", "verify")


def _log(message: str):
    if settings.VERBOSE:
        print(message, file=sys.stderr)


async def _run_graph(initial_state: AnalysisState) -> AnalysisState:
    """Streams the LangGraph pipeline and returns the merged final state."""
    state = dict(initial_state)
    async for event in app.astream(initial_state):
        for key, value in event.items():
            _log(f"--- Node '{key}' Finished ---")
            if value:
                state.update(value)
    return state


async def run_analysis(
    file_path: Optional[Path] = None,
    text: Optional[str] = None,
    family: Optional[str] = None,
    tasks: Iterable[str] = ALL_TASKS,
    tol: Optional[float] = None,
) -> Report:
    """
    Runs load -> exact -> (bounds || verify) -> report for one graph given as
    an edge-list file, edge-list text or a family spec.
    """
    if sum(source is not None for source in (file_path, text, family)) != 1:
        raise ValueError("exactly one of file_path, text or family is required")
    initial_state: AnalysisState = {
        "file_path": Path(file_path) if file_path is not None else None,
        "text": text,
        "family": family,
        "tasks": list(tasks),
        "tol": tol if tol is not None else settings.VERIFY_TOL,
    }
    _log(f"--- Starting analysis ({', '.join(initial_state['tasks'])}) ---")
    state = await _run_graph(initial_state)
    _log("--- Analysis Finished ---")
    return state["report"]


async def run_reproduction(selector: str = "all") -> Report:
    """Evaluates the bound catalog on each selected table's graph and sets it against the printed values."""
    agent = ReproductionAgent(settings)
    tables = []
    for table in agent.select(selector):
        state = await _run_graph({"family": table.family, "tasks": ["bounds"], "tol": settings.VERIFY_TOL})
        tables.append(await agent.run(table, state["graph"], state["bounds"]))
    return Report(tables=tables)


async def run_comparison(files: Sequence[Path] = (), families: Sequence[str] = ()) -> Report:
    """One row per input graph: exact R+ beside the best lower and upper bounds."""
    sources = [{"file_path": Path(f)} for f in files] + [{"family": f} for f in families]
    rows = []
    for source in sources:
        state = await _run_graph({**source, "tasks": ["exact", "bounds"], "tol": settings.VERIFY_TOL})
        report = state["report"]
        best_lower, best_upper = report.bounds.best_lower, report.bounds.best_upper
        rows.append(
            ComparisonRow(
                label=report.graph.label,
                n=report.graph.n,
                m=report.graph.m,
                r_plus=report.indices.r_plus,
                best_lower_id=best_lower.id if best_lower else None,
                best_lower=best_lower.value if best_lower else None,
                best_upper_id=best_upper.id if best_upper else None,
                best_upper=best_upper.value if best_upper else None,
            )
        )
    return Report(comparison=rows)


def run_minimum(n: int, partitions: Optional[int] = None, workers: int = 1) -> BruteForceResult:
    partitions = partitions if partitions is not None else settings.BRUTE_FORCE_PARTITIONS
    _log(f"--- Enumerating labeled connected graphs on {n} vertices ({partitions} partitions) ---")
    return brute_force_minimum(n, partitions=partitions, workers=workers)


if __name__ == "__main__":
    report = asyncio.run(run_reproduction("all"))
    for table in report.tables:
        print(f"Table {table.table}: {'passed' if table.passed else 'FAILED'}")
