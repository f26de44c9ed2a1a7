"""
Run ledger routes: run and graph listings, clearing and TSV export.
"""

from typing import List, Optional

from fastapi import APIRouter, Depends, HTTPException, Query, status
from fastapi.responses import StreamingResponse
from sqlalchemy.orm import Session

from app.models.database import get_db
from app.schemas.schemas import GraphRecordResponse, RunRecordResponse
from app.services.ledger import clear_runs, list_graphs, list_runs, runs_frame

router = APIRouter(prefix="/api", tags=["runs"])


@router.get("/runs", response_model=List[RunRecordResponse])
async def get_runs(algorithm: Optional[str] = None, limit: int = Query(100, ge=1, le=1000),
                   db: Session = Depends(get_db)):
    """Most recent runs first."""
    return list_runs(db, algorithm=algorithm, limit=limit)


@router.get("/graphs", response_model=List[GraphRecordResponse])
async def get_graphs(limit: int = Query(100, ge=1, le=1000), db: Session = Depends(get_db)):
    """Graphs recorded alongside runs, most recent first."""
    return list_graphs(db, limit=limit)


@router.delete("/runs/clear")
async def delete_runs(db: Session = Depends(get_db)):
    try:
        deleted = clear_runs(db)
        return {"message": "Run ledger cleared", "deleted_runs": deleted}
    except Exception as e:
        db.rollback()
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))


@router.get("/export/runs.tsv")
async def export_runs_tsv(db: Session = Depends(get_db)):
    """Export the ledger as TSV, one row per run."""
    try:
        frame = runs_frame(db)
        content = frame.to_csv(sep="\t", index=False, lineterminator="\n")
        return StreamingResponse(
            iter([content]),
            media_type="text/tab-separated-values",
            headers={"Content-Disposition": "attachment; filename=runs.tsv"},
        )
    except Exception as e:
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))
