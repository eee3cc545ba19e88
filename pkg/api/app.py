from typing import List, Optional

from fastapi import FastAPI, File, HTTPException, Query, UploadFile

from config.settings import settings
from core.errors import KirchhoffError
from orchestrator.pipeline import ALL_TASKS, run_analysis, run_reproduction

app = FastAPI(title="Kirchhoff Index API")


@app.get("/")
async def root():
    """A simple endpoint to confirm the API is running."""
    return {"status": "ok", "message": "Additive degree-Kirchhoff index API"}


@app.post("/analyze/")
async def analyze(
    file: Optional[UploadFile] = File(None),
    family: Optional[str] = Query(None, description="'name:k=v,...', e.g. sun:n=20"),
    tasks: List[str] = Query(list(ALL_TASKS)),
    tol: float = Query(settings.VERIFY_TOL),
):
    """
    Endpoint to analyze one graph, uploaded as an edge-list file or given as a family spec.
    """
    if (file is None) == (family is None):
        raise HTTPException(status_code=400, detail="give exactly one of an edge-list upload or ?family=")
    unknown = set(tasks) - set(ALL_TASKS)
    if unknown:
        raise HTTPException(status_code=400, detail=f"unknown task(s): {', '.join(sorted(unknown))}")

    try:
        if file is not None:
            text = (await file.read()).decode("utf-8")
            report = await run_analysis(text=text, tasks=tasks, tol=tol)
        else:
            report = await run_analysis(family=family, tasks=tasks, tol=tol)
        return report.model_dump(mode="json")
    except KirchhoffError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except UnicodeDecodeError as e:
        raise HTTPException(status_code=400, detail=f"edge list is not UTF-8: {e}")
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"An error occurred: {str(e)}")


@app.get("/reproduce/{table}")
async def reproduce(table: str):
    """Published tables 1-4 (or 'all') against the computed bounds."""
    try:
        report = await run_reproduction(table)
        return report.model_dump(mode="json")
    except KirchhoffError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"An error occurred: {str(e)}")
