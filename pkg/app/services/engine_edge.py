"""
Edge-oriented branch-and-bound (EBBMC).

Every branch adds the two endpoints of an edge. Edges are visited in
ascending rank of a global edge ordering (truss peeling by default), and the
per-edge auxiliary sets restrict each sub-branch to later-ranked structure.
Cliques of odd size come out of the zero-degree sweep at the end of a branch.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple
import logging

from app import config
from app.schemas.schemas import EdgeOrdering
from app.services.early_term import MAX_PLEX, early_terminate
from app.services.errors import ContractViolation
from app.services.graph_core import Graph, induced_edge_count
from app.services.orderings import EdgeRanking, edge_order
from app.services.sink import CliqueSink
from app.services.validators import BranchValidator
from app.services.engine_vertex import EnumStats

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeAux:
    """Per-edge auxiliary sets, indexed by edge id."""
    vplus: Tuple[FrozenSet[int], ...]
    eplus: Tuple[FrozenSet[int], ...]
    vminus: Tuple[FrozenSet[int], ...]
    eminus: Tuple[FrozenSet[int], ...]


@dataclass
class EdgeBranch:
    S: Tuple[int, ...]
    Cv: Set[int]
    Ce: Set[int]
    Xv: Set[int]
    Xe: Set[int]


def later_common_neighbors(graph: Graph, rank, eid: int) -> Set[int]:
    """Common neighbours w of edge eid whose edges to both endpoints rank after it."""
    u, v = graph.edges[eid]
    r = rank[eid]
    nbrs = graph.neighbor_sets
    return {w for w in nbrs[u] & nbrs[v]
            if rank[graph.edge_id(u, w)] > r and rank[graph.edge_id(v, w)] > r}


def rank_sweep(graph: Graph, ranking: EdgeRanking) -> Iterator[Tuple[int, List[Set[int]]]]:
    """
    Visit edge ids in ascending rank. Alongside each edge yields `live`, the
    adjacency of the edges ranked after it; `live` is mutated between steps.
    """
    live = [set(nbrs) for nbrs in graph.adjacency]
    for eid in ranking.order:
        u, v = graph.edges[eid]
        live[u].discard(v)
        live[v].discard(u)
        yield eid, live


def build_edge_aux(graph: Graph, ranking: EdgeRanking) -> EdgeAux:
    rank = ranking.rank
    nbrs = graph.neighbor_sets
    vplus: List[FrozenSet[int]] = []
    eplus: List[FrozenSet[int]] = []
    vminus: List[FrozenSet[int]] = []
    eminus: List[FrozenSet[int]] = []

    for eid, (u, v) in enumerate(graph.edges):
        r = rank[eid]
        common = nbrs[u] & nbrs[v]
        plus = later_common_neighbors(graph, rank, eid)
        inside_plus, inside_minus = [], []
        for a in common:
            for b in nbrs[a] & common:
                if a >= b:
                    continue
                other = graph.edge_id(a, b)
                if a in plus and b in plus and rank[other] > r:
                    inside_plus.append(other)
                else:
                    inside_minus.append(other)
        vplus.append(frozenset(plus))
        vminus.append(common - plus)
        eplus.append(frozenset(inside_plus))
        eminus.append(frozenset(inside_minus))

    return EdgeAux(vplus=tuple(vplus), eplus=tuple(eplus), vminus=tuple(vminus), eminus=tuple(eminus))


def zero_degree_terminate(graph: Graph, branch: EdgeBranch, sink: CliqueSink) -> int:
    """
    Emit S + (v,) for every candidate v untouched by candidate edges that has
    no G-neighbour among the other candidate and exclusion vertices.
    """
    touched: Set[int] = set()
    for eid in branch.Ce:
        touched.update(graph.edges[eid])
    blockers = branch.Cv | branch.Xv
    nbrs = graph.neighbor_sets
    emitted = 0
    for v in sorted(branch.Cv - touched):
        if nbrs[v].isdisjoint(blockers):
            sink.emit(branch.S + (v,))
            emitted += 1
    return emitted


class EdgeEngine:
    """EBBMC over a global edge ranking."""

    name = "ebbmc"

    def __init__(self, graph: Graph, et_threshold: int = config.DEFAULT_ET,
                 edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS,
                 check_invariants: bool = config.CHECK_INVARIANTS):
        if not 0 <= et_threshold <= MAX_PLEX:
            raise ContractViolation(f"et_threshold must be in 0..{MAX_PLEX}, got {et_threshold}")
        self.graph = graph
        self.nbrs = graph.neighbor_sets
        self.et_threshold = et_threshold
        self.edge_ordering = EdgeOrdering(edge_ordering)
        self.validator = BranchValidator(graph) if check_invariants else None
        self.stats = EnumStats()
        self.ranking: Optional[EdgeRanking] = None
        self.aux: Optional[EdgeAux] = None

    def prepare(self) -> None:
        self.ranking = edge_order(self.graph, self.edge_ordering)
        self.aux = build_edge_aux(self.graph, self.ranking)
        if self.validator is not None:
            ok, message = self.validator.validate_edge_aux(self.aux, self.ranking.rank)
            if not ok:
                raise ContractViolation(message)

    def enumerate(self, sink: CliqueSink) -> EnumStats:
        if self.aux is None:
            self.prepare()
        aux = self.aux

        for eid in self.ranking.order:
            self.stats.max_level1_candidates = max(self.stats.max_level1_candidates, len(aux.vplus[eid]))
            branch = EdgeBranch(
                S=self.graph.edges[eid],
                Cv=set(aux.vplus[eid]),
                Ce=set(aux.eplus[eid]),
                Xv=set(aux.vminus[eid]),
                Xe=set(aux.eminus[eid]),
            )
            self._expand(branch, sink)

        for v in range(self.graph.vertex_count):
            if not self.graph.adjacency[v]:
                sink.emit((v,))

        return self.stats

    def _candidate_adjacency(self, branch: EdgeBranch) -> Dict[int, Set[int]]:
        cand: Dict[int, Set[int]] = {v: set() for v in branch.Cv}
        for eid in branch.Ce:
            a, b = self.graph.edges[eid]
            cand[a].add(b)
            cand[b].add(a)
        return cand

    def _expand(self, branch: EdgeBranch, sink: CliqueSink) -> None:
        self.stats.recursive_calls += 1
        if self.validator is not None:
            ok, message = self.validator.validate_edge_branch(branch)
            if not ok:
                raise ContractViolation(message)

        S, Cv, Ce, Xv, Xe = branch.S, branch.Cv, branch.Ce, branch.Xv, branch.Xe
        if not Cv:
            if not Xv:
                sink.emit(S)
            return

        cand = self._candidate_adjacency(branch)
        if self._terminate_early(branch, cand, sink):
            return

        entry = EdgeBranch(S, Cv, set(Ce), Xv, set(Xe))
        rank, aux, edges, nbrs = self.ranking.rank, self.aux, self.graph.edges, self.nbrs

        for eid in sorted(Ce, key=rank.__getitem__):
            a, b = edges[eid]
            common = nbrs[a] & nbrs[b]
            vplus = aux.vplus[eid]
            child = EdgeBranch(
                S=S + (a, b),
                Cv=Cv & vplus,
                Ce=Ce & aux.eplus[eid],
                Xv=(Xv & common) | ((Cv & common) - vplus),
                Xe=Xe & aux.eminus[eid],
            )
            self._expand(child, sink)
            Ce.remove(eid)
            Xe.add(eid)

        zero_degree_terminate(self.graph, entry, sink)

    def _terminate_early(self, branch: EdgeBranch, cand: Dict[int, Set[int]], sink: CliqueSink) -> bool:
        Cv = branch.Cv
        return early_terminate(
            self.stats, branch.S, Cv, cand, branch.Xv,
            min_degree=min(len(nbrs) for nbrs in cand.values()),
            candidate_edges=len(branch.Ce),
            induced_edges=lambda: induced_edge_count(self.graph, Cv),
            et_threshold=self.et_threshold,
            sink=sink,
        )


def ebbmc_enumerate(graph: Graph, sink: CliqueSink, et_threshold: int = config.DEFAULT_ET,
                    edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS) -> EnumStats:
    engine = EdgeEngine(graph, et_threshold, edge_ordering)
    stats = engine.enumerate(sink)
    logger.info(f"ebbmc finished: n={graph.n}, m={graph.m}, cliques={sink.count}, "
                f"calls={stats.recursive_calls}")
    return stats
