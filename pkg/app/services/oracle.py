"""
Reference enumerators used to check the engines.

`exhaustive_mce` tests every vertex subset and shares no code with the
engines; `reference_bk` is plain pivot Bron-Kerbosch with no orderings, no
rank filtering and no early termination.
"""

from typing import List, Set, Tuple
import logging

from app import config
from app.services.errors import OracleCapacityError
from app.services.graph_core import Graph

logger = logging.getLogger(__name__)


def exhaustive_mce(graph: Graph, max_n: int = config.ORACLE_MAX_N) -> List[Tuple[int, ...]]:
    """
    All maximal cliques by subset dynamic programming over bitmasks.

    common[mask] is the set of vertices adjacent to every member of mask; a
    mask is a clique when its lowest vertex lies in common[rest], and maximal
    when additionally common[mask] is empty.
    """
    n = graph.vertex_count
    if n > max_n:
        raise OracleCapacityError(f"exhaustive oracle supports n <= {max_n}, got n={n}")
    if n == 0:
        return []

    adjacency_mask = [0] * n
    for u, v in graph.edges:
        adjacency_mask[u] |= 1 << v
        adjacency_mask[v] |= 1 << u

    size = 1 << n
    common = [0] * size
    is_clique = bytearray(size)
    common[0] = size - 1
    is_clique[0] = 1
    maximal: List[Tuple[int, ...]] = []

    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        common[mask] = common[rest] & adjacency_mask[v]
        if is_clique[rest] and (common[rest] >> v) & 1:
            is_clique[mask] = 1
            if common[mask] == 0:
                maximal.append(tuple(i for i in range(n) if (mask >> i) & 1))

    return sorted(maximal)


def reference_bk(graph: Graph, pivot: bool = True) -> List[Tuple[int, ...]]:
    """Textbook Bron-Kerbosch; `pivot=False` gives the pivotless variant."""
    if graph.vertex_count == 0:
        return []
    nbrs = graph.neighbor_sets
    out: List[Tuple[int, ...]] = []

    def bron_kerbosch(R: Tuple[int, ...], P: Set[int], X: Set[int]) -> None:
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        if pivot:
            u = max(P | X, key=lambda w: (len(P & nbrs[w]), -w))
            branch_on = P - nbrs[u]
        else:
            branch_on = set(P)
        for v in sorted(branch_on):
            bron_kerbosch(R + (v,), P & nbrs[v], X & nbrs[v])
            P.remove(v)
            X.add(v)

    bron_kerbosch((), set(range(graph.vertex_count)), set())
    return sorted(out)
