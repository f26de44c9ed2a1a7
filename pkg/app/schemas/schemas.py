"""
Pydantic schemas for graph statistics, run reports and API request/response bodies.
"""

from typing import Optional, List, Tuple
from datetime import datetime
from pydantic import BaseModel, Field, model_validator
from enum import Enum


class Algorithm(str, Enum):
    """Enumeration engines."""
    VBBMC = "vbbmc"
    EBBMC = "ebbmc"
    HBBMC = "hbbmc"
    ORACLE = "oracle"


class OutputMode(str, Enum):
    COUNT = "count"
    LIST = "list"
    DIGEST = "digest"


class EdgeOrdering(str, Enum):
    """Initial-branch edge orderings for the edge and hybrid engines."""
    TRUSS = "truss"
    ALPHABETICAL = "alphabetical"
    MINDEGREE = "mindegree"


class GenModel(str, Enum):
    """Graph generators reachable from a `gen` spec string."""
    ER = "er"
    BA = "ba"
    MOON_MOSER = "mm"
    COMPLETE = "k"
    COMPLETE_BIPARTITE = "kpp"
    CYCLE = "cycle"
    PATH = "path"


# Generator Schemas
class GenSpec(BaseModel):
    """
    Generator parameters. For `kpp`, `n` is the part size p (the graph has 2p vertices).
    """
    model: GenModel
    n: int = Field(..., ge=1)
    rho: float = Field(default=0.0, ge=0.0)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)


# Statistics Schemas
class GraphStats(BaseModel):
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    delta: int = Field(..., ge=0)
    tau: int = Field(..., ge=0)
    rho: float = Field(..., ge=0.0)
    condition: bool
    triangles: Optional[int] = None

    def as_lines(self) -> List[str]:
        return [
            f"n={self.n}",
            f"m={self.m}",
            f"delta={self.delta}",
            f"tau={self.tau}",
            f"rho={self.rho:.4f}",
            f"condition={'true' if self.condition else 'false'}",
        ]


# Run Schemas
class RunReport(BaseModel):
    """Outcome of one enumeration run."""
    algorithm: Algorithm
    edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS
    et_threshold: int = Field(..., ge=0, le=3)
    n: int = Field(default=0, ge=0)
    m: int = Field(default=0, ge=0)
    clique_count: int = Field(..., ge=0)
    clique_digest: str = Field(..., min_length=16, max_length=16)
    recursive_calls: int = Field(default=0, ge=0)
    et_eligible_branches: int = Field(default=0, ge=0)
    et_fired_branches: int = Field(default=0, ge=0)
    max_level1_candidates: int = Field(default=0, ge=0)
    elapsed_ms: float = Field(default=0.0, ge=0.0)
    ordering_ms: float = Field(default=0.0, ge=0.0)

    @property
    def et_ratio(self) -> Optional[float]:
        if self.et_eligible_branches == 0:
            return None
        return self.et_fired_branches / self.et_eligible_branches

    def as_lines(self) -> List[str]:
        return [
            f"algorithm={self.algorithm.value}",
            f"edge_ordering={self.edge_ordering.value}",
            f"et={self.et_threshold}",
            f"cliques={self.clique_count}",
            f"digest={self.clique_digest}",
            f"recursive_calls={self.recursive_calls}",
            f"et_eligible_branches={self.et_eligible_branches}",
            f"et_fired_branches={self.et_fired_branches}",
            f"elapsed_ms={self.elapsed_ms:.3f}",
            f"ordering_ms={self.ordering_ms:.3f}",
        ]


# Request Schemas
class GraphInput(BaseModel):
    """A graph given inline as an edge list or as a generator spec string."""
    edges: Optional[List[Tuple[int, int]]] = None
    gen: Optional[str] = Field(default=None, examples=["er:n=100,rho=3,seed=1"])

    @model_validator(mode="after")
    def exactly_one_source(self):
        if (self.edges is None) == (self.gen is None):
            raise ValueError("provide exactly one of 'edges' or 'gen'")
        return self


class EnumerateRequest(GraphInput):
    algorithm: Algorithm = Algorithm.HBBMC
    et: int = Field(default=3, ge=0, le=3)
    edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS
    output: OutputMode = OutputMode.COUNT
    record: bool = False
    name: Optional[str] = Field(default=None, max_length=200)


class EnumerateResponse(BaseModel):
    report: RunReport
    stats: Optional[GraphStats] = None
    cliques: Optional[List[List[int]]] = None
    run_id: Optional[int] = None


# Ledger Schemas
class GraphRecordResponse(BaseModel):
    id: int
    name: str
    n: int
    m: int
    delta: int
    tau: int
    rho: float
    condition: bool
    created_at: datetime

    class Config:
        from_attributes = True


class RunRecordResponse(BaseModel):
    id: int
    graph_id: int
    algorithm: str
    edge_ordering: str
    et_threshold: int
    clique_count: int
    clique_digest: str
    recursive_calls: int
    et_eligible_branches: int
    et_fired_branches: int
    elapsed_ms: float
    ordering_ms: float
    created_at: datetime

    class Config:
        from_attributes = True
