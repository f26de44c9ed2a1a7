"""
Shared pytest fixtures: small named graphs, generated corpora and helpers.
"""

import os

# The ledger must never touch a file during tests; set before app.config is imported.
os.environ["MCE_DATABASE_URL"] = "sqlite:///:memory:"
os.environ.setdefault("LOG_LEVEL", "WARNING")

from typing import Dict, List, Set, Tuple

import pytest

from app.schemas.schemas import Algorithm, GenModel, GenSpec, OutputMode
from app.services.graph_core import Graph
from app.services.oracle import exhaustive_mce
from app.services.runner import run_enumeration
from app.services.sink import CliqueSink
from app.services.synth import (
    complete_bipartite, complete_graph, cycle_graph, density_for_probability,
    gen_ba, gen_er, moon_moser, path_graph,
)

ENGINE_NAMES = [Algorithm.VBBMC, Algorithm.EBBMC, Algorithm.HBBMC]
ET_VALUES = [0, 1, 2, 3]
ER_PROBABILITIES = (0.2, 0.5, 0.8)


def er_graph(n: int, p: float, seed: int) -> Graph:
    return gen_er(GenSpec(model=GenModel.ER, n=n, rho=density_for_probability(n, p), seed=seed))


def ba_graph(n: int, rho: float, seed: int) -> Graph:
    return gen_ba(GenSpec(model=GenModel.BA, n=n, rho=rho, seed=seed))


def enumerate_list(graph: Graph, algorithm=Algorithm.HBBMC, et: int = 3, **kwargs) -> List[Tuple[int, ...]]:
    sink = CliqueSink(OutputMode.LIST)
    run_enumeration(graph, algorithm, et, sink=sink, **kwargs)
    return sink.cliques


def build_small_graphs() -> Dict[str, Graph]:
    return {
        "empty": Graph.from_edges(0, []),
        "single": Graph.from_edges(1, []),
        "three_isolated": Graph.from_edges(3, []),
        "k3": complete_graph(3),
        "k4": complete_graph(4),
        "k5": complete_graph(5),
        "p3": path_graph(3),
        "p4": path_graph(4),
        "c4": cycle_graph(4),
        "c5": cycle_graph(5),
        "star": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
        "k33": complete_bipartite(3),
        "two_edges": Graph.from_edges(4, [(0, 1), (2, 3)]),
        "isolated_plus_edge": Graph.from_edges(3, [(1, 2)]),
        "mm6": moon_moser(6),
        "mm9": moon_moser(9),
        "k6_minus_matching": Graph.from_edges(
            6, [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) not in {(0, 1), (2, 3), (4, 5)}]
        ),
        "bowtie": Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
        "diamond": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    }


def build_er_corpus(count: int = 200) -> List[Tuple[str, Graph]]:
    corpus = []
    for i in range(count):
        n = 4 + i % 11
        p = ER_PROBABILITIES[i % 3]
        corpus.append((f"er-n{n}-p{p}-s{i}", er_graph(n, p, seed=i)))
    return corpus


@pytest.fixture(scope="session")
def small_graphs() -> Dict[str, Graph]:
    return build_small_graphs()


@pytest.fixture(scope="session")
def er_corpus() -> List[Tuple[str, Graph]]:
    return build_er_corpus()


@pytest.fixture(scope="session")
def er_oracle(er_corpus) -> Dict[str, Set[Tuple[int, ...]]]:
    return {name: set(exhaustive_mce(graph)) for name, graph in er_corpus}


@pytest.fixture(scope="session")
def mixed_corpus(small_graphs, er_corpus) -> List[Tuple[str, Graph]]:
    """Named graphs, the first 60 ER graphs and a few small BA graphs."""
    corpus = list(small_graphs.items()) + er_corpus[:60]
    corpus += [(f"ba-n{n}-s{s}", ba_graph(n, rho, s)) for n, rho, s in
               [(12, 2, 1), (14, 3, 2), (20, 2, 3), (16, 4, 4)]]
    return corpus
