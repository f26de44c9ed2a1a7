"""
Clique enumeration and statistics routes.
"""

from typing import Tuple

from fastapi import APIRouter, Depends, HTTPException, status
from sqlalchemy.orm import Session

from app.models.database import get_db
from app.schemas.schemas import (
    EnumerateRequest, EnumerateResponse, GraphInput, GraphStats, OutputMode,
)
from app.services.errors import MCEError
from app.services.graph_core import Graph
from app.services.ledger import record_graph, record_run
from app.services.orderings import compute_stats
from app.services.runner import run_enumeration
from app.services.sink import CliqueSink
from app.services.synth import generate, parse_gen_spec

router = APIRouter(prefix="/api/cliques", tags=["cliques"])


def resolve_graph(payload: GraphInput) -> Tuple[str, Graph]:
    """Build the graph named by a request body: an inline edge list or a generator spec."""
    if payload.gen is not None:
        return payload.gen, generate(parse_gen_spec(payload.gen))
    pairs = payload.edges or []
    if any(u < 0 or v < 0 for u, v in pairs):
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail="vertex ids must be non-negative")
    return f"inline:{len(pairs)} edges", Graph.from_pairs(pairs)


@router.post("/enumerate", response_model=EnumerateResponse)
async def enumerate_cliques(request: EnumerateRequest, db: Session = Depends(get_db)):
    """Run one engine over the graph; optionally store the run in the ledger."""
    try:
        name, graph = resolve_graph(request)
        sink = CliqueSink(request.output)
        report = run_enumeration(graph, request.algorithm, request.et, request.edge_ordering, sink)

        response = EnumerateResponse(report=report)
        if request.output == OutputMode.LIST:
            response.cliques = [[graph.original_id(v) for v in c] for c in sink.sorted_cliques()]
        if request.record:
            stats = compute_stats(graph)
            response.stats = stats
            run = record_run(db, record_graph(db, request.name or name, stats), report)
            response.run_id = run.id
        return response

    except HTTPException:
        raise
    except MCEError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))


@router.post("/stats", response_model=GraphStats)
async def graph_stats(payload: GraphInput):
    """n, m, delta, tau, rho and the hybrid condition for a graph."""
    try:
        _, graph = resolve_graph(payload)
        return compute_stats(graph, with_triangles=True)
    except HTTPException:
        raise
    except MCEError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
