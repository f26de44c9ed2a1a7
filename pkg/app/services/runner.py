"""
Engine registry and the timed enumeration run shared by the CLI, the
benchmark and the HTTP routes.
"""

from time import perf_counter
from typing import Callable, Dict, Optional
import logging
import sys

from app import config
from app.schemas.schemas import Algorithm, EdgeOrdering, RunReport
from app.services.engine_edge import EdgeEngine
from app.services.engine_hybrid import HybridEngine
from app.services.engine_vertex import EnumStats, VertexEngine
from app.services.graph_core import Graph
from app.services.oracle import exhaustive_mce, reference_bk
from app.services.sink import CliqueSink

logger = logging.getLogger(__name__)


class OracleEngine:
    """Runs the reference enumerators behind the engine interface."""

    name = "oracle"

    def __init__(self, graph: Graph, et_threshold: int = 0,
                 edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS):
        self.graph = graph
        self.et_threshold = et_threshold
        self.stats = EnumStats()

    def prepare(self) -> None:
        pass

    def enumerate(self, sink: CliqueSink) -> EnumStats:
        if self.graph.vertex_count <= config.ORACLE_MAX_N:
            cliques = exhaustive_mce(self.graph)
        else:
            cliques = reference_bk(self.graph)
        for clique in cliques:
            sink.emit(clique)
        return self.stats


GraphReducer = Callable[[Graph], Graph]


def reduce_graph(graph: Graph) -> Graph:
    """
    Preprocessing hook applied before an engine is prepared. A reducer must
    return a graph with the same maximal cliques over the same vertex ids;
    this default leaves the graph untouched.
    """
    return graph


def _vertex_engine(graph: Graph, et_threshold: int, edge_ordering: EdgeOrdering) -> VertexEngine:
    return VertexEngine(graph, et_threshold)


ENGINES: Dict[Algorithm, Callable] = {
    Algorithm.VBBMC: _vertex_engine,
    Algorithm.EBBMC: EdgeEngine,
    Algorithm.HBBMC: HybridEngine,
    Algorithm.ORACLE: OracleEngine,
}


def make_engine(graph: Graph, algorithm: Algorithm, et_threshold: int = config.DEFAULT_ET,
                edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS):
    factory = ENGINES[Algorithm(algorithm)]
    return factory(graph, et_threshold, EdgeOrdering(edge_ordering))


def run_enumeration(graph: Graph, algorithm: Algorithm = Algorithm(config.DEFAULT_ALGORITHM),
                    et_threshold: int = config.DEFAULT_ET,
                    edge_ordering: EdgeOrdering = EdgeOrdering(config.DEFAULT_EDGE_ORDERING),
                    sink: Optional[CliqueSink] = None,
                    reducer: GraphReducer = reduce_graph) -> RunReport:
    """
    Reduce the graph, build the engine's ordering, run it, and report.
    `elapsed_ms` covers ordering construction plus recursion; `ordering_ms` is
    the first part alone.
    """
    algorithm = Algorithm(algorithm)
    sink = sink if sink is not None else CliqueSink()
    if sys.getrecursionlimit() < config.RECURSION_LIMIT:
        sys.setrecursionlimit(config.RECURSION_LIMIT)

    graph = reducer(graph)
    engine = make_engine(graph, algorithm, et_threshold, edge_ordering)
    start = perf_counter()
    engine.prepare()
    prepared = perf_counter()
    stats = engine.enumerate(sink)
    finished = perf_counter()

    report = RunReport(
        algorithm=algorithm,
        edge_ordering=EdgeOrdering(edge_ordering),
        et_threshold=et_threshold,
        n=graph.vertex_count,
        m=graph.edge_count,
        clique_count=sink.count,
        clique_digest=sink.digest_hex,
        recursive_calls=stats.recursive_calls,
        et_eligible_branches=stats.et_eligible_branches,
        et_fired_branches=stats.et_fired_branches,
        max_level1_candidates=stats.max_level1_candidates,
        elapsed_ms=(finished - start) * 1000.0,
        ordering_ms=(prepared - start) * 1000.0,
    )
    logger.info(f"{algorithm.value} et={et_threshold}: n={graph.n}, m={graph.m}, "
                f"cliques={report.clique_count}, calls={report.recursive_calls}, "
                f"elapsed={report.elapsed_ms:.1f}ms")
    return report
