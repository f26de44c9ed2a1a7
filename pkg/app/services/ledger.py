"""
Run ledger: stores graphs and enumeration runs, and reads them back as tables.
"""

from typing import List, Optional
import logging

import pandas as pd
from sqlalchemy.orm import Session

from app.models.models import GraphRecord, RunRecord
from app.schemas.schemas import GraphStats, RunReport

logger = logging.getLogger(__name__)

RUN_COLUMNS = [
    "id", "graph", "n", "m", "algorithm", "edge_ordering", "et_threshold", "clique_count",
    "clique_digest", "recursive_calls", "et_eligible_branches", "et_fired_branches",
    "elapsed_ms", "ordering_ms", "created_at",
]


def record_graph(db: Session, name: str, stats: GraphStats) -> GraphRecord:
    record = GraphRecord(
        name=name[:200],
        n=stats.n,
        m=stats.m,
        delta=stats.delta,
        tau=stats.tau,
        rho=stats.rho,
        condition=stats.condition,
    )
    db.add(record)
    db.commit()
    db.refresh(record)
    return record


def record_run(db: Session, graph_record: GraphRecord, report: RunReport) -> RunRecord:
    run = RunRecord(
        graph_id=graph_record.id,
        algorithm=report.algorithm.value,
        edge_ordering=report.edge_ordering.value,
        et_threshold=report.et_threshold,
        clique_count=report.clique_count,
        clique_digest=report.clique_digest,
        recursive_calls=report.recursive_calls,
        et_eligible_branches=report.et_eligible_branches,
        et_fired_branches=report.et_fired_branches,
        elapsed_ms=report.elapsed_ms,
        ordering_ms=report.ordering_ms,
    )
    db.add(run)
    db.commit()
    db.refresh(run)
    logger.info(f"Recorded run {run.id}: {run.algorithm} on graph {graph_record.id} ({graph_record.name})")
    return run


def list_runs(db: Session, algorithm: Optional[str] = None, limit: int = 100) -> List[RunRecord]:
    query = db.query(RunRecord)
    if algorithm:
        query = query.filter(RunRecord.algorithm == algorithm)
    return query.order_by(RunRecord.id.desc()).limit(limit).all()


def list_graphs(db: Session, limit: int = 100) -> List[GraphRecord]:
    return db.query(GraphRecord).order_by(GraphRecord.id.desc()).limit(limit).all()


def clear_runs(db: Session) -> int:
    count = db.query(RunRecord).delete()
    db.query(GraphRecord).delete()
    db.commit()
    return count


def runs_frame(db: Session) -> pd.DataFrame:
    rows = []
    for run in db.query(RunRecord).order_by(RunRecord.id).all():
        rows.append({
            "id": run.id,
            "graph": run.graph.name,
            "n": run.graph.n,
            "m": run.graph.m,
            "algorithm": run.algorithm,
            "edge_ordering": run.edge_ordering,
            "et_threshold": run.et_threshold,
            "clique_count": run.clique_count,
            "clique_digest": run.clique_digest,
            "recursive_calls": run.recursive_calls,
            "et_eligible_branches": run.et_eligible_branches,
            "et_fired_branches": run.et_fired_branches,
            "elapsed_ms": run.elapsed_ms,
            "ordering_ms": run.ordering_ms,
            "created_at": run.created_at.isoformat() if run.created_at else "",
        })
    return pd.DataFrame(rows, columns=RUN_COLUMNS)
