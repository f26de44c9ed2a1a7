"""
Vertex and edge orderings plus the graph statistics derived from them.

Both peelings use a binary heap with lazy deletion: stale (key, id) entries are
skipped on pop. Ties go to the smallest vertex id / edge id, so every ordering
is a deterministic function of the graph.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple
import heapq
import logging
import math

from app.schemas.schemas import EdgeOrdering, GraphStats
from app.services.graph_core import Graph, common_neighbors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegeneracyOrder:
    """`position[v]` is the removal step of v; `order` lists vertices by removal."""
    order: Tuple[int, ...]
    position: Tuple[int, ...]
    degeneracy: int

    @property
    def delta(self) -> int:
        return self.degeneracy


@dataclass(frozen=True)
class EdgeRanking:
    """A total order on edge ids: `rank[eid]` and its inverse `order[rank]`."""
    rank: Tuple[int, ...]
    order: Tuple[int, ...]
    strategy: EdgeOrdering


@dataclass(frozen=True)
class TrussEdgeOrder(EdgeRanking):
    """
    Truss peeling order. `support[eid]` is the residual support of the edge at
    the moment it was removed; `tau` is the largest of those.
    """
    tau: int
    support: Tuple[int, ...]


def degeneracy_order(graph: Graph) -> DegeneracyOrder:
    n = graph.vertex_count
    degree = [len(nbrs) for nbrs in graph.adjacency]
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    removed = [False] * n
    position = [0] * n
    order: List[int] = []
    delta = 0

    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        position[v] = len(order)
        order.append(v)
        delta = max(delta, d)
        for w in graph.adjacency[v]:
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))

    logger.debug(f"Degeneracy order computed: n={n}, delta={delta}")
    return DegeneracyOrder(order=tuple(order), position=tuple(position), degeneracy=delta)


def truss_edge_order(graph: Graph) -> TrussEdgeOrder:
    """
    Peel edges by minimum residual support. Rank 0 is the first edge removed,
    so the residual common neighbourhood of an edge at removal time is exactly
    the set of common neighbours reached through later-ranked edges.
    """
    m = graph.edge_count
    support = [len(common_neighbors(graph, u, v)) for u, v in graph.edges]
    heap = [(s, eid) for eid, s in enumerate(support)]
    heapq.heapify(heap)

    alive = [set(nbrs) for nbrs in graph.adjacency]
    removed = [False] * m
    removal_support = [0] * m
    rank = [0] * m
    order: List[int] = []
    tau = 0

    while heap:
        s, eid = heapq.heappop(heap)
        if removed[eid] or s != support[eid]:
            continue
        removed[eid] = True
        rank[eid] = len(order)
        order.append(eid)
        removal_support[eid] = s
        tau = max(tau, s)

        u, v = graph.edges[eid]
        alive[u].discard(v)
        alive[v].discard(u)
        for w in alive[u] & alive[v]:
            for other in (graph.edge_id(u, w), graph.edge_id(v, w)):
                support[other] -= 1
                heapq.heappush(heap, (support[other], other))

    logger.debug(f"Truss edge order computed: m={m}, tau={tau}")
    return TrussEdgeOrder(
        rank=tuple(rank),
        order=tuple(order),
        strategy=EdgeOrdering.TRUSS,
        tau=tau,
        support=tuple(removal_support),
    )


def _ranking_from_order(order: List[int], strategy: EdgeOrdering) -> EdgeRanking:
    rank = [0] * len(order)
    for r, eid in enumerate(order):
        rank[eid] = r
    return EdgeRanking(rank=tuple(rank), order=tuple(order), strategy=strategy)


def alphabetical_edge_order(graph: Graph) -> EdgeRanking:
    """Edges sorted by the degeneracy positions of their endpoints, earlier endpoint first."""
    position = degeneracy_order(graph).position

    def key(eid: int) -> Tuple[int, int]:
        u, v = graph.edges[eid]
        pu, pv = position[u], position[v]
        return (pu, pv) if pu < pv else (pv, pu)

    return _ranking_from_order(sorted(range(graph.edge_count), key=key), EdgeOrdering.ALPHABETICAL)


def mindegree_edge_order(graph: Graph) -> EdgeRanking:
    """Edges sorted by min{d(u), d(v)}, ties by edge id."""
    def key(eid: int) -> Tuple[int, int]:
        u, v = graph.edges[eid]
        return min(len(graph.adjacency[u]), len(graph.adjacency[v])), eid

    return _ranking_from_order(sorted(range(graph.edge_count), key=key), EdgeOrdering.MINDEGREE)


def edge_order(graph: Graph, strategy: EdgeOrdering = EdgeOrdering.TRUSS) -> EdgeRanking:
    strategy = EdgeOrdering(strategy)
    if strategy == EdgeOrdering.TRUSS:
        return truss_edge_order(graph)
    if strategy == EdgeOrdering.ALPHABETICAL:
        return alphabetical_edge_order(graph)
    return mindegree_edge_order(graph)


def triangle_count(graph: Graph) -> int:
    """Each triangle u < v < w is counted once, at its smallest edge (u, v)."""
    higher = [frozenset(w for w in nbrs if w > u) for u, nbrs in enumerate(graph.adjacency)]
    total = 0
    for u, v in graph.edges:
        total += len(higher[u] & higher[v])
    return total


def hybrid_condition(delta: float, tau: float, rho: float) -> bool:
    """True when delta >= max{3, tau + 3 ln(rho) / ln(3)}."""
    if rho <= 0:
        return False
    bound = max(3.0, tau + 3.0 * math.log(float(rho)) / math.log(3.0))
    return delta >= bound


def compute_stats(graph: Graph, with_triangles: bool = False) -> GraphStats:
    n, m = graph.vertex_count, graph.edge_count
    delta = degeneracy_order(graph).degeneracy
    tau = truss_edge_order(graph).tau
    rho = Fraction(m, n) if n > 0 else Fraction(0)
    condition = n > 0 and hybrid_condition(delta, tau, rho)

    return GraphStats(
        n=n,
        m=m,
        delta=delta,
        tau=tau,
        rho=float(rho),
        condition=condition,
        triangles=triangle_count(graph) if with_triangles else None,
    )
