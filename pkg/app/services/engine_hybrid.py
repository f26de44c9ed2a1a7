"""
Hybrid branch-and-bound (HBBMC): edge branching at the initial branch,
pivot-based vertex branching below it.

For initial edge e = (u, v) of rank r the branch starts from S = (u, v),
C = Vplus(e), X = Vminus(e), and a candidate adjacency that keeps only edges
ranked after r. A clique is therefore reported under its minimum-rank edge
and nowhere else. Isolated vertices are swept up at the end.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple
import logging

from app import config
from app.schemas.schemas import EdgeOrdering, OutputMode
from app.services.engine_edge import later_common_neighbors, rank_sweep
from app.services.engine_vertex import Branch, EnumStats, VertexEngine
from app.services.graph_core import Graph
from app.services.orderings import EdgeRanking, edge_order
from app.services.sink import CliqueSink

logger = logging.getLogger(__name__)


class HybridEngine(VertexEngine):
    """
    `rank_filter=False` hands every initial branch the full common
    neighbourhood with graph adjacency; it exists only to show that the filter
    is what prevents duplicate output.
    """

    name = "hbbmc"

    def __init__(self, graph: Graph, et_threshold: int = config.DEFAULT_ET,
                 edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS,
                 check_invariants: bool = config.CHECK_INVARIANTS,
                 rank_filter: bool = True):
        super().__init__(graph, et_threshold, check_invariants)
        self.edge_ordering = EdgeOrdering(edge_ordering)
        self.rank_filter = rank_filter
        self.ranking: Optional[EdgeRanking] = None
        self.level1_sizes: List[int] = [0] * graph.edge_count

    def prepare(self) -> None:
        self.ranking = edge_order(self.graph, self.edge_ordering)

    def initial_branch(self, eid: int) -> Branch:
        graph, nbrs = self.graph, self.nbrs
        u, v = graph.edges[eid]

        if not self.rank_filter:
            return Branch((u, v), set(nbrs[u] & nbrs[v]), set(), nbrs)

        rank = self.ranking.rank
        r = rank[eid]
        C = later_common_neighbors(graph, rank, eid)
        X = set((nbrs[u] & nbrs[v]) - C)
        cand: Dict[int, FrozenSet[int]] = {
            a: frozenset(b for b in nbrs[a] & C if rank[graph.edge_id(a, b)] > r)
            for a in C
        }
        return Branch((u, v), C, X, cand)

    def initial_branches(self) -> Iterator[Tuple[int, Branch]]:
        """All initial branches in rank order; same branches as `initial_branch`."""
        if not self.rank_filter:
            for eid in self.ranking.order:
                yield eid, self.initial_branch(eid)
            return

        nbrs = self.nbrs
        for eid, live in rank_sweep(self.graph, self.ranking):
            u, v = self.graph.edges[eid]
            C = live[u] & live[v]
            X = set(nbrs[u] & nbrs[v]) - C
            cand: Dict[int, FrozenSet[int]] = {a: frozenset(live[a] & C) for a in C}
            yield eid, Branch((u, v), C, X, cand)

    def enumerate(self, sink: CliqueSink) -> EnumStats:
        if self.ranking is None:
            self.prepare()

        for eid, branch in self.initial_branches():
            self.level1_sizes[eid] = len(branch.C)
            self.stats.max_level1_candidates = max(self.stats.max_level1_candidates, len(branch.C))
            self._expand(branch, sink)

        for v in range(self.graph.vertex_count):
            if not self.graph.adjacency[v]:
                sink.emit((v,))

        return self.stats


def hbbmc_enumerate(graph: Graph, sink: CliqueSink, et_threshold: int = config.DEFAULT_ET,
                    edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS) -> EnumStats:
    engine = HybridEngine(graph, et_threshold, edge_ordering)
    stats = engine.enumerate(sink)
    logger.info(f"hbbmc finished: n={graph.n}, m={graph.m}, cliques={sink.count}, "
                f"calls={stats.recursive_calls}")
    return stats


def hybrid_recurse(graph: Graph, branch: Branch, sink: CliqueSink,
                   et_threshold: int = config.DEFAULT_ET) -> EnumStats:
    """Pivot recursion over a branch whose `cand` carries rank-filtered adjacency."""
    engine = HybridEngine(graph, et_threshold)
    engine._expand(Branch(tuple(branch.S), set(branch.C), set(branch.X), branch.cand), sink)
    return engine.stats


@dataclass(frozen=True)
class BranchProfile:
    """Level-1 candidate sizes (indexed by edge id) of one hybrid run."""
    level1_sizes: Tuple[int, ...]
    recursive_calls: int
    tau: Optional[int]

    @property
    def max_size(self) -> int:
        return max(self.level1_sizes, default=0)

    @property
    def histogram(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.level1_sizes).items()))


def branch_size_profile(graph: Graph, et_threshold: int = config.DEFAULT_ET,
                        edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS) -> BranchProfile:
    engine = HybridEngine(graph, et_threshold, edge_ordering)
    engine.prepare()
    engine.enumerate(CliqueSink(OutputMode.COUNT))
    return BranchProfile(
        level1_sizes=tuple(engine.level1_sizes),
        recursive_calls=engine.stats.recursive_calls,
        tau=getattr(engine.ranking, "tau", None),
    )
