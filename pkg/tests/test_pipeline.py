import asyncio

import pytest

from agents.bounds.bounds_agent import BoundsAgent
from agents.exact.exact_agent import ExactAgent
from agents.generator.generator_agent import GeneratorAgent
from agents.parser.parser_agent import ParserAgent
from agents.reproduction.reproduction_agent import ReproductionAgent
from agents.verifier.verifier_agent import VerifierAgent
from config.settings import settings
from core.errors import EdgeListParseError, InfeasibleFamilyError, TableDataError
from core.graph.models import FamilySpec
from orchestrator.graph import graph_label
from orchestrator.pipeline import run_analysis, run_comparison, run_minimum


# --- agents ----------------------------------------------------------------------

def test_generator_and_parser_agents_agree(petersen_path):
    generated = asyncio.run(GeneratorAgent(settings).run(spec="petersen"))
    parsed = asyncio.run(ParserAgent(settings).run(file_path=petersen_path))
    assert generated.edges == parsed.edges


def test_generator_agent_accepts_a_spec_object():
    g = asyncio.run(GeneratorAgent(settings).run(spec=FamilySpec.parse("star:n=5")))
    assert g.m == 4


def test_agents_reraise_input_errors():
    with pytest.raises(InfeasibleFamilyError):
        asyncio.run(GeneratorAgent(settings).run(spec="sun:n=9"))
    with pytest.raises(EdgeListParseError):
        asyncio.run(ParserAgent(settings).run(text="3 2\n0 1"))


def test_exact_bounds_and_verifier_agents():
    g = asyncio.run(GeneratorAgent(settings).run(spec="star:n=4"))
    exact = asyncio.run(ExactAgent(settings).run(graph=g))
    assert set(exact) == {"resistances", "spectrum", "indices"}
    assert exact["indices"].r_plus == pytest.approx(24.0)

    catalog = asyncio.run(BoundsAgent(settings).run(graph=g, **exact))
    assert catalog.best_upper.id == "UB-30"

    report = asyncio.run(
        VerifierAgent(settings).run(graph=g, resistances=exact["resistances"], spectrum=exact["spectrum"])
    )
    assert report.passed and report.tolerance == settings.VERIFY_TOL


def test_status_lines_only_when_verbose(monkeypatch, capsys):
    monkeypatch.setattr(settings, "VERBOSE", False)
    ExactAgent(settings)
    assert capsys.readouterr().err == ""

    monkeypatch.setattr(settings, "VERBOSE", True)
    ExactAgent(settings)
    captured = capsys.readouterr()
    assert "✅ Initialized ExactAgent" in captured.err
    assert captured.out == ""


def test_reproduction_agent_selection():
    agent = ReproductionAgent(settings)
    assert [t.table for t in agent.select("all")] == [1, 2, 3, 4]
    assert agent.tables() is agent.tables()
    with pytest.raises(TableDataError):
        agent.select("5")


# --- pipeline --------------------------------------------------------------------

def test_exact_only():
    report = asyncio.run(run_analysis(family="star:n=4", tasks=["exact"]))
    assert report.graph.label == "star:n=4"
    assert report.indices.r_plus == pytest.approx(24.0)
    assert report.bounds is None and report.verification is None
    assert report.passed


def test_bounds_only():
    report = asyncio.run(run_analysis(family="sun:n=20", tasks=["bounds"]))
    assert report.indices is None and report.verification is None
    assert report.bounds.get("LB-14").value == 695


def test_verify_only_with_custom_tolerance():
    report = asyncio.run(run_analysis(family="petersen", tasks=["verify"], tol=1e-6))
    assert report.verification.tolerance == 1e-6
    assert report.verification.passed
    assert report.bounds is None


def test_failed_verification_fails_the_report():
    report = asyncio.run(run_analysis(family="cycle:n=5", tasks=["verify"], tol=-1.0))
    assert not report.verification.passed
    assert not report.passed


def test_all_tasks_from_text_and_file(petersen_path):
    from_text = asyncio.run(run_analysis(text=petersen_path.read_text()))
    from_file = asyncio.run(run_analysis(file_path=petersen_path))
    assert from_text.graph.label == "<text>"
    assert from_file.graph.label == "petersen.txt"
    assert from_text.indices == from_file.indices
    assert from_file.bounds.get("UB-DR").applicable
    assert from_file.verification.passed


@pytest.mark.parametrize("sources", [{}, {"family": "star:n=4", "text": "2 1\n0 1"}])
def test_exactly_one_source(sources):
    with pytest.raises(ValueError):
        asyncio.run(run_analysis(**sources))


def test_parse_errors_propagate():
    with pytest.raises(EdgeListParseError):
        asyncio.run(run_analysis(text="3 2\n0 1"))


def test_graph_label():
    assert graph_label({"family": "sun:n=20"}) == "sun:n=20"
    assert graph_label({"text": "2 1\n0 1"}) == "<text>"


def test_comparison(petersen_path):
    report = asyncio.run(run_comparison(files=[petersen_path], families=["complete:n=4", "star:n=4"]))
    rows = {row.label: row for row in report.comparison}
    assert list(rows) == ["petersen.txt", "complete:n=4", "star:n=4"]
    assert rows["complete:n=4"].r_plus == pytest.approx(18.0)
    assert rows["complete:n=4"].best_lower_id == "LB-3"
    assert rows["star:n=4"].best_upper_id == "UB-30"
    for row in rows.values():
        assert row.best_lower <= row.r_plus * (1 + settings.BOUND_SLACK)
        assert row.best_upper >= row.r_plus * (1 - settings.BOUND_SLACK)


def test_minimum():
    result = run_minimum(4)
    assert result.graphs_checked == 38
    assert result.min_r_plus == pytest.approx(18.0)
