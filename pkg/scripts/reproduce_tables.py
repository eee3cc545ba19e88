import asyncio
import sys
from orchestrator.pipeline import run_reproduction
from core.report.render import render

async def main(selector: str):
    """
    Runs the table reproduction and prints a markdown summary.
    """
    report = await run_reproduction(selector)
    print(render(report, "markdown"), end="")
    for table in report.tables:
        status = "✅" if table.passed else "❌"
        print(f"{status} Table {table.table}: {table.caption}")
    return 0 if report.passed else 1

if __name__ == "__main__":
    selector = sys.argv[1] if len(sys.argv) > 1 else "all"
    sys.exit(asyncio.run(main(selector)))
