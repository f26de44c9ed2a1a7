"""
Vertex-oriented branch-and-bound (Bron-Kerbosch with Tomita pivoting).

The initial branch follows the degeneracy order; below it every branch pivots
on the vertex with the most candidate neighbours. The recursion in
`VertexEngine._expand` is shared with the hybrid engine, which hands it
rank-filtered candidate adjacency instead of the graph's own.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Optional, Set, Tuple
import logging

from app import config
from app.services.early_term import MAX_PLEX, early_terminate
from app.services.errors import ContractViolation
from app.services.graph_core import Graph, induced_edge_count
from app.services.orderings import DegeneracyOrder, degeneracy_order
from app.services.sink import CliqueSink
from app.services.validators import BranchValidator

logger = logging.getLogger(__name__)

CandidateAdjacency = Mapping[int, FrozenSet[int]]


@dataclass
class Branch:
    """
    (S, C, X) triplet. `cand` is the candidate adjacency: `cand[v]` for v in C
    lists v's neighbours in the candidate graph. Vertices of X are always
    looked up in the graph itself.
    """
    S: Tuple[int, ...]
    C: Set[int]
    X: Set[int]
    cand: CandidateAdjacency


@dataclass
class EnumStats:
    """Counters collected over one enumeration run."""
    recursive_calls: int = 0
    et_eligible_branches: int = 0
    et_fired_branches: int = 0
    plex_branches: Dict[int, int] = field(default_factory=lambda: {t: 0 for t in range(1, MAX_PLEX + 1)})
    max_level1_candidates: int = 0

    def eligible_at(self, t: int) -> int:
        """Branches whose candidate graph is a t'-plex for some t' <= t."""
        return sum(count for degree, count in self.plex_branches.items() if degree <= t)


@dataclass(frozen=True)
class PivotChoice:
    vertex: int
    candidate_degree: int
    min_candidate_degree: Optional[int]
    candidate_edge_count: int


def select_pivot(branch: Branch, graph: Graph) -> PivotChoice:
    """
    Vertex of C | X with the most neighbours in C, ties to the smallest id.
    The same scan yields the minimum candidate degree and the candidate edge count.
    """
    C, X, cand = branch.C, branch.X, branch.cand
    if not C and not X:
        raise ContractViolation("pivot requested for a branch with empty C and X")

    best_vertex, best_degree = -1, -1
    min_degree: Optional[int] = None
    degree_sum = 0

    for u in C:
        d = len(cand[u] & C)
        degree_sum += d
        if min_degree is None or d < min_degree:
            min_degree = d
        if d > best_degree or (d == best_degree and u < best_vertex):
            best_vertex, best_degree = u, d

    nbrs = graph.neighbor_sets
    for x in X:
        d = len(nbrs[x] & C)
        if d > best_degree or (d == best_degree and x < best_vertex):
            best_vertex, best_degree = x, d

    return PivotChoice(
        vertex=best_vertex,
        candidate_degree=best_degree,
        min_candidate_degree=min_degree,
        candidate_edge_count=degree_sum // 2,
    )


class VertexEngine:
    """
    VBBMC: one branch per vertex in degeneracy order, pivot recursion below.
    """

    name = "vbbmc"

    def __init__(self, graph: Graph, et_threshold: int = config.DEFAULT_ET,
                 check_invariants: bool = config.CHECK_INVARIANTS):
        if not 0 <= et_threshold <= MAX_PLEX:
            raise ContractViolation(f"et_threshold must be in 0..{MAX_PLEX}, got {et_threshold}")
        self.graph = graph
        self.nbrs = graph.neighbor_sets
        self.et_threshold = et_threshold
        self.check_invariants = check_invariants
        self.validator = BranchValidator(graph) if check_invariants else None
        self.stats = EnumStats()
        self.ordering: Optional[DegeneracyOrder] = None

    def prepare(self) -> None:
        """Build the ordering the initial branch needs."""
        self.ordering = degeneracy_order(self.graph)

    def enumerate(self, sink: CliqueSink) -> EnumStats:
        if self.ordering is None:
            self.prepare()
        position = self.ordering.position

        for v in self.ordering.order:
            later = {w for w in self.nbrs[v] if position[w] > position[v]}
            earlier = set(self.nbrs[v].difference(later))
            self.stats.max_level1_candidates = max(self.stats.max_level1_candidates, len(later))
            self._expand(Branch((v,), later, earlier, self.nbrs), sink)

        return self.stats

    def _expand(self, branch: Branch, sink: CliqueSink) -> None:
        self.stats.recursive_calls += 1
        if self.validator is not None:
            ok, message = self.validator.validate_branch(branch)
            if not ok:
                raise ContractViolation(message)

        S, C, X, cand = branch.S, branch.C, branch.X, branch.cand
        if not C:
            if not X:
                sink.emit(S)
            return

        choice = select_pivot(branch, self.graph)
        if self._terminate_early(branch, choice, sink):
            return

        nbrs = self.nbrs
        pivot = choice.vertex
        pivot_nbrs = cand[pivot] if pivot in C else nbrs[pivot]

        for w in sorted(C - pivot_nbrs):
            cw, gw = cand[w], nbrs[w]
            new_C = C & cw
            new_X = X & gw
            if cw is not gw:
                # G-neighbours cut from the candidate graph move to exclusion.
                new_X |= (C & gw) - cw
            self._expand(Branch(S + (w,), new_C, new_X, cand), sink)
            C.remove(w)
            X.add(w)

    def _terminate_early(self, branch: Branch, choice: PivotChoice, sink: CliqueSink) -> bool:
        C = branch.C
        induced = None if branch.cand is self.nbrs else (lambda: induced_edge_count(self.graph, C))
        return early_terminate(
            self.stats, branch.S, C, branch.cand, branch.X,
            min_degree=choice.min_candidate_degree,
            candidate_edges=choice.candidate_edge_count,
            induced_edges=induced,
            et_threshold=self.et_threshold,
            sink=sink,
        )


def vbbmc_enumerate(graph: Graph, sink: CliqueSink, et_threshold: int = config.DEFAULT_ET) -> EnumStats:
    engine = VertexEngine(graph, et_threshold)
    stats = engine.enumerate(sink)
    logger.info(f"vbbmc finished: n={graph.n}, m={graph.m}, cliques={sink.count}, "
                f"calls={stats.recursive_calls}")
    return stats


def vbbmc_recurse(graph: Graph, branch: Branch, sink: CliqueSink,
                  et_threshold: int = config.DEFAULT_ET) -> EnumStats:
    """Run the pivot recursion on a single branch (its sets are copied first)."""
    engine = VertexEngine(graph, et_threshold)
    engine._expand(Branch(tuple(branch.S), set(branch.C), set(branch.X), branch.cand), sink)
    return engine.stats
