"""FastAPI service exposing the character-polytope pipeline.

All endpoints are stateless POSTs over pydantic request models; results
are the same deterministic output documents the CLI prints.  Validation
errors map to 400, cross-check failures (route disagreement) to 500.

Run with:  uvicorn polychar.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import api
from .api import CrossCheckError
from .branching import DecompositionError, EmbeddingError
from .rootsystem import InvalidAlgebraError

app = FastAPI(
    title="polychar",
    description="Polytope expansion of Lie characters: weight multiplicities, "
                "tensor products, and branching rules with exact arithmetic.",
    version="0.1.0",
)


class MultsRequest(BaseModel):
    algebra: str = Field(examples=["A2"])
    weight: str = Field(description="comma-separated Dynkin labels", examples=["1,3"])
    height_bound: int | None = None


class PolytopeRequest(BaseModel):
    algebra: str
    weight: str
    height_bound: int | None = None


class TensorRequest(BaseModel):
    algebra: str
    left: str
    right: str
    method: str = "all"


class BranchRequest(BaseModel):
    algebra: str
    embedding: str | dict = Field(
        description='"principal-a1", "subdiagram:i,j,...", or an inline '
                    "embedding document")
    weight: str
    method: str = "all"


class BrionCheckRequest(BaseModel):
    algebra: str
    weight: str
    seed: int = 0
    directions: int = api.BRION_DEFAULT_DIRECTIONS


class OutputDocument(BaseModel):
    schema_version: str
    command: str
    algebra: str
    inputs: dict
    result: dict


def _run(fn, *args, **kwargs) -> dict:
    try:
        return fn(*args, **kwargs)
    except (ValueError, InvalidAlgebraError, EmbeddingError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except (CrossCheckError, DecompositionError) as exc:
        raise HTTPException(status_code=500, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/mults", response_model=OutputDocument)
def mults(req: MultsRequest):
    return _run(api.cmd_mults, req.algebra, req.weight, req.height_bound)


@app.post("/polytope", response_model=OutputDocument)
def polytope_expansion(req: PolytopeRequest):
    return _run(api.cmd_polytope, req.algebra, req.weight, req.height_bound)


@app.post("/tensor", response_model=OutputDocument)
def tensor(req: TensorRequest):
    return _run(api.cmd_tensor, req.algebra, req.left, req.right, req.method)


@app.post("/branch", response_model=OutputDocument)
def branch(req: BranchRequest):
    return _run(api.cmd_branch, req.algebra, req.embedding, req.weight, req.method)


@app.post("/brion-check", response_model=OutputDocument)
def brion_check(req: BrionCheckRequest):
    return _run(api.cmd_brion_check, req.algebra, req.weight, req.seed, req.directions)
