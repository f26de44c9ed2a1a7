"""
Self-checking benchmark: runs every (graph, algorithm, et) cell, keeps the
median elapsed time over the repeats, and requires all cells of a graph to
agree on the clique digest.
"""

from dataclasses import dataclass, field
from statistics import median
from typing import Iterable, List, Optional, Sequence, Tuple
import logging

import pandas as pd

from app.schemas.schemas import Algorithm, EdgeOrdering, RunReport
from app.services.graph_core import Graph
from app.services.runner import run_enumeration

logger = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "graph", "n", "m", "algorithm", "edge_ordering", "et", "median_ms", "ordering_ms",
    "cliques", "recursive_calls", "et_eligible", "et_fired", "et_ratio", "digest",
]


@dataclass
class BenchResult:
    table: pd.DataFrame
    reports: List[Tuple[str, RunReport]] = field(default_factory=list)


def run_bench(graphs: Iterable[Tuple[str, Graph]], algorithms: Sequence[Algorithm],
              ets: Sequence[int], repeats: int = 1,
              edge_ordering: EdgeOrdering = EdgeOrdering.TRUSS) -> BenchResult:
    """Cells run one after another; each cell is repeated `repeats` times."""
    rows = []
    reports: List[Tuple[str, RunReport]] = []

    for name, graph in graphs:
        for algorithm in algorithms:
            for et in ets:
                runs = [run_enumeration(graph, algorithm, et, edge_ordering) for _ in range(max(1, repeats))]
                last = runs[-1]
                reports.append((name, last))
                rows.append({
                    "graph": name,
                    "n": graph.vertex_count,
                    "m": graph.edge_count,
                    "algorithm": Algorithm(algorithm).value,
                    "edge_ordering": EdgeOrdering(edge_ordering).value,
                    "et": et,
                    "median_ms": median(r.elapsed_ms for r in runs),
                    "ordering_ms": median(r.ordering_ms for r in runs),
                    "cliques": last.clique_count,
                    "recursive_calls": last.recursive_calls,
                    "et_eligible": last.et_eligible_branches,
                    "et_fired": last.et_fired_branches,
                    "et_ratio": last.et_ratio,
                    "digest": last.clique_digest,
                })
                logger.debug(f"bench cell {name}/{Algorithm(algorithm).value}/et={et}: "
                             f"{rows[-1]['median_ms']:.1f}ms")

    table = pd.DataFrame(rows, columns=BENCH_COLUMNS)
    return BenchResult(table=table, reports=reports)


def check_digests(table: pd.DataFrame) -> Tuple[bool, Optional[str]]:
    """All rows of a graph must carry the same digest; names the first disagreeing pair."""
    for name, group in table.groupby("graph", sort=False):
        first = group.iloc[0]
        for _, row in group.iloc[1:].iterrows():
            if row["digest"] != first["digest"]:
                return False, (
                    f"digest mismatch on {name}: "
                    f"{first['algorithm']}/et={first['et']} -> {first['digest']} vs "
                    f"{row['algorithm']}/et={row['et']} -> {row['digest']}"
                )
    return True, None


def format_table(table: pd.DataFrame) -> str:
    """TSV in BENCH_COLUMNS order."""
    return table.to_csv(sep="\t", index=False, float_format="%.3f", lineterminator="\n")
