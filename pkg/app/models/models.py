"""
SQLAlchemy models for the enumeration run ledger.
"""

from datetime import datetime
from sqlalchemy import Column, Integer, String, Float, ForeignKey, DateTime, Boolean, Index
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class GraphRecord(Base):
    """A graph that was enumerated, with its statistics."""
    __tablename__ = "graphs"

    id = Column(Integer, primary_key=True, index=True)
    name = Column(String(200), nullable=False)  # file name or generator spec
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    delta = Column(Integer, nullable=False)
    tau = Column(Integer, nullable=False)
    rho = Column(Float, nullable=False)
    condition = Column(Boolean, nullable=False, default=False)
    created_at = Column(DateTime, default=datetime.utcnow)

    runs = relationship("RunRecord", back_populates="graph", cascade="all, delete-orphan")


class RunRecord(Base):
    """One enumeration run over a recorded graph."""
    __tablename__ = "runs"

    id = Column(Integer, primary_key=True, index=True)
    graph_id = Column(Integer, ForeignKey("graphs.id"), nullable=False)
    algorithm = Column(String(20), nullable=False)
    edge_ordering = Column(String(20), nullable=False, default="truss")
    et_threshold = Column(Integer, nullable=False)
    clique_count = Column(Integer, nullable=False)
    clique_digest = Column(String(16), nullable=False)  # 16 lowercase hex digits
    recursive_calls = Column(Integer, default=0)
    et_eligible_branches = Column(Integer, default=0)
    et_fired_branches = Column(Integer, default=0)
    elapsed_ms = Column(Float, default=0.0)
    ordering_ms = Column(Float, default=0.0)
    created_at = Column(DateTime, default=datetime.utcnow)

    graph = relationship("GraphRecord", back_populates="runs")

    __table_args__ = (Index("ix_runs_graph_algorithm", "graph_id", "algorithm"),)
