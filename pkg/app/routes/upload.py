"""
Upload route: enumerate the maximal cliques of an edge-list file.
"""

import io

from fastapi import APIRouter, Depends, File, HTTPException, Query, UploadFile, status
from sqlalchemy.orm import Session

from app import config
from app.models.database import get_db
from app.schemas.schemas import Algorithm, EdgeOrdering
from app.services.errors import EdgeListParseError, MCEError
from app.services.graph_core import load_edge_list
from app.services.ledger import record_graph, record_run
from app.services.orderings import compute_stats
from app.services.runner import run_enumeration

router = APIRouter(prefix="/api/upload", tags=["upload"])


@router.post("/edge-list")
async def upload_edge_list(
    file: UploadFile = File(...),
    algorithm: Algorithm = Query(Algorithm(config.DEFAULT_ALGORITHM)),
    et: int = Query(config.DEFAULT_ET, ge=0, le=3),
    edge_ordering: EdgeOrdering = Query(EdgeOrdering(config.DEFAULT_EDGE_ORDERING)),
    record: bool = Query(True),
    db: Session = Depends(get_db),
):
    """Parse the uploaded edge list, report its statistics and one enumeration run."""
    try:
        contents = await file.read()
        graph = load_edge_list(io.StringIO(contents.decode("utf-8")))
    except UnicodeDecodeError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=f"Failed to read edge list: {e}")
    except EdgeListParseError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=f"Failed to parse edge list: {e}")

    try:
        stats = compute_stats(graph)
        report = run_enumeration(graph, algorithm, et, edge_ordering)
    except MCEError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))

    run_id = None
    if record:
        graph_record = record_graph(db, file.filename or "upload", stats)
        run_id = record_run(db, graph_record, report).id

    return {
        "filename": file.filename,
        "stats": stats,
        "report": report,
        "run_id": run_id,
    }
