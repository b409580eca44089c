"""
FastAPI application for factored lifts and their spectra
"""
from typing import Literal, Optional

import uvicorn
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from src.basegraph.corpus import BUILTINS, is_builtin, resolve_input
from src.basegraph.text_format import parse_base_graph
from src.config import load_settings
from src.errors import ConditionViolationError, EigenSolverError
from src.lift.builder import LiftBuilder, edge_count
from src.lift.export import summary_line, to_edge_list, to_json_document
from src.models.base_graph import AdjacencyMode, CombinedBaseGraph, Directedness
from src.models.spectrum import complex_pair
from src.spectral.engine import SpectralEngine
from src.verify.checks import VerificationSuite
from src.verify.comparison import compare_multisets
from src.verify.oracles import direct_spectrum
from src.verify.table import rows_from_report

app = FastAPI(
    title="Factored Lift Spectra",
    description="Factored lifts of combined voltage graphs over Z_m and their polynomial-matrix spectra",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

settings = load_settings()
engine = SpectralEngine(settings)
suite = VerificationSuite(settings)


class BaseGraphRequest(BaseModel):
    """A base graph given as a builtin name or as .cvg text"""
    builtin: Optional[str] = Field(None, description="f3c6, j42 or c<m>")
    text: Optional[str] = Field(None, description="Base graph in the .cvg format")
    mode: AdjacencyMode = AdjacencyMode.MULTIPLICITY


class LiftRequest(BaseGraphRequest):
    format: Literal["json", "text"] = Field("json", description="json document or summary plus edge list")


class SpectrumRequest(BaseGraphRequest):
    method: Literal["polymat", "direct", "both"] = "both"


def load_base(request: BaseGraphRequest) -> CombinedBaseGraph:
    if (request.builtin is None) == (request.text is None):
        raise HTTPException(status_code=400, detail="Give exactly one of 'builtin' and 'text'")
    if request.builtin is not None:
        return builtin_or_404(request.builtin)
    try:
        return parse_base_graph(request.text)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


def builtin_or_404(name: str) -> CombinedBaseGraph:
    if not is_builtin(name):
        raise HTTPException(status_code=404, detail=f"Unknown builtin '{name}'")
    return resolve_input(name)


@app.get("/")
def root():
    """Root endpoint"""
    return {
        "message": "Factored Lift Spectra API",
        "version": "1.0.0",
        "documentation": "/docs"
    }


@app.get("/health")
def health_check():
    """Health check endpoint"""
    return {"status": "healthy"}


@app.get("/api/builtins")
def list_builtins():
    """Compiled-in base graphs"""
    return {"builtins": sorted(BUILTINS), "families": ["c<m>"]}


@app.post("/api/lifts")
def build_lift(request: LiftRequest):
    """Construct the factored lift"""
    base = load_base(request)
    try:
        lift = LiftBuilder(request.mode).build(base)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

    if request.format == "text":
        return {"format": "text", "summary": summary_line(lift), "edge_list": to_edge_list(lift)}

    document = to_json_document(lift)
    document["summary"] = summary_line(lift)
    if base.directedness == Directedness.GRAPH:
        document["edges"] = edge_count(lift)
    return document


@app.post("/api/spectra")
def compute_spectrum(request: SpectrumRequest):
    """Polynomial-matrix spectrum, direct spectrum, or both with their comparison"""
    base = load_base(request)
    result = {"method": request.method, "mode": request.mode.value}
    try:
        report = None
        direct = None
        if request.method in ("polymat", "both"):
            report = engine.full_spectrum(base, request.mode)
            result["polymat"] = report.to_json_document()
        if request.method in ("direct", "both"):
            direct = direct_spectrum(LiftBuilder(request.mode).build(base))
            result["direct"] = [complex_pair(value) for value in direct]
        if report is not None and direct is not None:
            comparison = compare_multisets(
                report.spectrum, direct, settings.compare_tol, left_label="polymat", right_label="direct",
            )
            result["comparison"] = comparison.to_json_document()
    except (EigenSolverError, ConditionViolationError) as e:
        raise HTTPException(status_code=500, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return result


@app.post("/api/verify")
def verify(request: BaseGraphRequest):
    """Run the verification suite"""
    base = load_base(request)
    try:
        verification = suite.run(base, request.mode, label=request.builtin or "text")
    except (EigenSolverError, ConditionViolationError) as e:
        raise HTTPException(status_code=500, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return verification.to_json_document()


@app.get("/api/tables/{builtin}")
def get_table(builtin: str):
    """Eigenvalues of every B(ζ^r), support-rejected entries starred"""
    base = builtin_or_404(builtin)
    try:
        rows = rows_from_report(engine.full_spectrum(base))
    except EigenSolverError as e:
        raise HTTPException(status_code=500, detail=str(e))
    return {"builtin": builtin, "rows": [{"label": label, "values": values} for label, values in rows]}


if __name__ == "__main__":
    uvicorn.run(app, host="0.0.0.0", port=8000)
