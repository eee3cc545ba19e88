from pathlib import Path
from config.settings import settings
from orchestrator.state import AnalysisState
from langgraph.graph import StateGraph

# Import agents
from agents.parser.parser_agent import ParserAgent
from agents.generator.generator_agent import GeneratorAgent
from agents.exact.exact_agent import ExactAgent
from agents.bounds.bounds_agent import BoundsAgent
from agents.verifier.verifier_agent import VerifierAgent
from agents.reporter.reporter_agent import ReporterAgent

# Initialize agents
parser_agent = ParserAgent(settings)
generator_agent = GeneratorAgent(settings)
exact_agent = ExactAgent(settings)
bounds_agent = BoundsAgent(settings)
verifier_agent = VerifierAgent(settings)
reporter_agent = ReporterAgent(settings)

# --- SEQUENTIAL PREPROCESSING ---

async def load_node(state: AnalysisState):
    """Build the graph from a family spec, edge-list text or an edge-list file"""
    if state.get("family"):
        graph = await generator_agent.run(spec=state["family"])
        return {"graph": graph, "label": graph_label(state)}
    if state.get("text") is not None:
        graph = await parser_agent.run(text=state["text"])
    else:
        graph = await parser_agent.run(file_path=state.get("file_path"))
    return {"graph": graph, "label": graph_label(state)}

async def exact_node(state: AnalysisState):
    """Resistances, spectrum and indices, shared by both parallel branches"""
    return await exact_agent.run(graph=state["graph"])

# --- PARALLEL BRANCHES ---

async def bounds_node(state: AnalysisState):
    """Evaluate every closed-form bound"""
    if "bounds" not in state.get("tasks", []):
        return {"bounds": None}
    catalog = await bounds_agent.run(
        graph=state["graph"],
        resistances=state.get("resistances"),
        spectrum=state.get("spectrum"),
        indices=state.get("indices"),
    )
    return {"bounds": catalog}

async def verify_node(state: AnalysisState):
    """Check the exact identities"""
    if "verify" not in state.get("tasks", []):
        return {"verification": None}
    verification = await verifier_agent.run(
        graph=state["graph"],
        tol=state.get("tol"),
        resistances=state.get("resistances"),
        spectrum=state.get("spectrum"),
    )
    return {"verification": verification}

# --- JOIN ---

async def report_node(state: AnalysisState):
    """Assemble the report once both branches have finished"""
    report = await reporter_agent.run(
        graph=state["graph"],
        label=state["label"],
        tasks=state.get("tasks", []),
        indices=state.get("indices"),
        bounds=state.get("bounds"),
        verification=state.get("verification"),
    )
    return {"report": report}

def graph_label(state: AnalysisState) -> str:
    if state.get("family"):
        return str(state["family"])
    if state.get("file_path") is not None:
        return Path(state["file_path"]).name
    return "<text>"

# --- WORKFLOW CONSTRUCTION ---

def create_analysis_workflow():
    """
    load -> exact -> (bounds || verify) -> report
    """
    workflow = StateGraph(AnalysisState)

    workflow.add_node("load", load_node)
    workflow.add_node("exact", exact_node)
    workflow.add_node("bounds", bounds_node)
    workflow.add_node("verify", verify_node)
    workflow.add_node("report", report_node)

    # PHASE 1: Sequential preprocessing
    workflow.set_entry_point("load")
    workflow.add_edge("load", "exact")

    # PHASE 2: Parallel bounds and identity checks
    workflow.add_edge("exact", "bounds")
    workflow.add_edge("exact", "verify")

    # PHASE 3: Join
    workflow.add_edge(["bounds", "verify"], "report")
    workflow.set_finish_point("report")

    return workflow

app = create_analysis_workflow().compile()
