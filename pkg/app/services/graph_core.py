"""
Immutable undirected simple graph, edge-list loading and adjacency queries.

Every engine works on dense 0-based vertex ids. Edge ids are assigned in
lexicographic (min endpoint, max endpoint) order when the graph is built;
orderings permute ranks, never ids.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, TextIO, Tuple
import logging

from app.services.errors import EdgeListParseError, VertexRangeError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
VertexSet = Tuple[int, ...]

COMMENT_PREFIXES = ("#", "%")


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph with sorted adjacency and edge identifiers.

    `original_ids[v]` is the id vertex `v` carried in the loaded file.
    """
    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Edge, ...]
    original_ids: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_ids(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise VertexRangeError(v, self.vertex_count)

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of (u, v); KeyError when the pair is not an edge."""
        return self.edge_ids[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_ids

    def original_id(self, v: int) -> int:
        return self.original_ids[v] if self.original_ids else v

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[Edge],
                   original_ids: Sequence[int] = ()) -> "Graph":
        """
        Build a graph over vertices 0..vertex_count-1.
        Self-loops are dropped and duplicate / reversed pairs merged.
        """
        canonical = set()
        for u, v in pairs:
            if u == v:
                continue
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexRangeError(max(u, v) if max(u, v) >= vertex_count else min(u, v),
                                       vertex_count)
            canonical.add((u, v) if u < v else (v, u))

        edges = tuple(sorted(canonical))
        buckets: List[List[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            buckets[u].append(v)
            buckets[v].append(u)
        adjacency = tuple(tuple(sorted(b)) for b in buckets)
        return cls(
            vertex_count=vertex_count,
            adjacency=adjacency,
            edges=edges,
            original_ids=tuple(original_ids) if original_ids else tuple(range(vertex_count)),
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable[Edge]) -> "Graph":
        """
        Build a graph from pairs of arbitrary non-negative ids.

        Ids are remapped to 0..n-1 in ascending order of the original id and
        kept in `original_ids`. Ids seen only in self-loops are not vertices.
        """
        kept = [(u, v) for u, v in pairs if u != v]
        original_ids = sorted({x for pair in kept for x in pair})
        dense = {orig: i for i, orig in enumerate(original_ids)}
        return cls.from_edges(
            len(original_ids),
            ((dense[u], dense[v]) for u, v in kept),
            original_ids=original_ids,
        )


def load_edge_list(stream: TextIO) -> Graph:
    """
    Parse an edge-list text stream into a normalized Graph.

    Each data line holds two non-negative integer tokens (extra tokens such as
    weights are ignored). Lines starting with '#' or '%' are comments. Vertex ids
    are remapped to 0..n-1 in ascending order of their original id, so the
    result does not depend on line order.
    """
    raw_edges: List[Edge] = []

    for line_number, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith(COMMENT_PREFIXES):
            continue
        tokens = text.split()
        if len(tokens) < 2:
            raise EdgeListParseError(line_number, f"expected two vertex ids, got {text!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(line_number, f"malformed vertex id in {text!r}")
        if u < 0 or v < 0:
            raise EdgeListParseError(line_number, f"negative vertex id in {text!r}")
        raw_edges.append((u, v))

    graph = Graph.from_pairs(raw_edges)
    logger.debug(f"Loaded edge list: n={graph.n}, m={graph.m}")
    return graph


def dump_edge_list(graph: Graph, stream: TextIO) -> None:
    """Write the canonical serialization: one 'u v' line per edge, u < v, sorted."""
    for u, v in graph.edges:
        stream.write(f"{u} {v}\n")


def to_edge_list_text(graph: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in graph.edges)


def common_neighbors(graph: Graph, u: int, v: int) -> VertexSet:
    """Ascending merge-intersection of adj(u) and adj(v)."""
    graph.check_vertex(u)
    graph.check_vertex(v)
    a, b = graph.adjacency[u], graph.adjacency[v]
    i = j = 0
    out: List[int] = []
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return tuple(out)


def induced_edge_count(graph: Graph, vertices: Iterable[int]) -> int:
    """Number of edges of `graph` with both endpoints in `vertices`."""
    members = set(vertices)
    if not members:
        return 0
    nbrs = graph.neighbor_sets
    return sum(len(nbrs[v] & members) for v in members) // 2


def vertex_set(vertices: Iterable[int], graph: Optional[Graph] = None) -> VertexSet:
    """Strictly ascending tuple of ids, range-checked against `graph` if given."""
    out = tuple(sorted(set(vertices)))
    if graph is not None:
        for v in out:
            graph.check_vertex(v)
    return out
