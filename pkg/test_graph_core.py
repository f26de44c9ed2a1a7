"""
Tests for graph loading, normalization and adjacency queries.
"""

import io
import itertools

import pytest

from app.services.errors import EdgeListParseError, VertexRangeError
from app.services.graph_core import (
    Graph, common_neighbors, dump_edge_list, induced_edge_count, load_edge_list,
    to_edge_list_text, vertex_set,
)
from conftest import er_graph


def load(text: str) -> Graph:
    return load_edge_list(io.StringIO(text))


class TestLoadEdgeList:
    def test_triangle_with_duplicates_and_reversed_pairs(self):
        graph = load("0 1\n1 0\n1 2\n2 0\n0 1\n")
        assert graph.n == 3
        assert graph.m == 3
        assert graph.edges == ((0, 1), (0, 2), (1, 2))

    def test_sparse_ids_are_densified_by_original_order(self):
        graph = load("10 30\n30 20\n")
        assert graph.n == 3
        assert graph.original_ids == (10, 20, 30)
        assert graph.edges == ((0, 2), (1, 2))
        assert graph.original_id(2) == 30

    def test_comments_blank_lines_and_weights(self):
        graph = load("# header\n% matrix-market style\n\n1 2 0.5\n  2 3  \n")
        assert graph.n == 3
        assert graph.m == 2

    def test_self_loop_is_dropped_and_adds_no_vertex(self):
        graph = load("0 1\n5 5\n")
        assert graph.n == 2
        assert graph.m == 1

    def test_empty_input(self):
        graph = load("# nothing here\n")
        assert graph.n == 0
        assert graph.m == 0

    @pytest.mark.parametrize("text, line", [
        ("0 1\n7\n", 2),
        ("0 1\n1 x\n", 2),
        ("# c\n\n-1 2\n", 3),
        ("a b\n", 1),
    ])
    def test_parse_errors_carry_line_numbers(self, text, line):
        with pytest.raises(EdgeListParseError) as excinfo:
            load(text)
        assert excinfo.value.line_number == line
        assert str(excinfo.value).startswith(f"line {line}:")

    def test_line_order_does_not_change_the_graph(self):
        lines = ["3 9", "9 4", "4 3", "4 12", "12 3"]
        reference = load("\n".join(lines))
        for perm in itertools.permutations(lines):
            assert load("\n".join(perm)) == reference

    def test_dump_is_canonical_and_reloads(self, small_graphs):
        graph = small_graphs["bowtie"]
        buffer = io.StringIO()
        dump_edge_list(graph, buffer)
        text = buffer.getvalue()
        assert text == to_edge_list_text(graph)
        assert text.splitlines() == ["0 1", "0 2", "1 2", "2 3", "2 4", "3 4"]
        assert load(text) == graph

    def test_isolated_vertices_are_lost_in_serialization(self, small_graphs):
        reloaded = load(to_edge_list_text(small_graphs["isolated_plus_edge"]))
        assert reloaded.n == 2
        assert reloaded.edges == ((0, 1),)


class TestGraph:
    def test_from_edges_rejects_out_of_range(self):
        with pytest.raises(VertexRangeError):
            Graph.from_edges(3, [(0, 3)])

    def test_from_pairs_densifies_ids(self):
        graph = Graph.from_pairs([(5, 9)])
        assert (graph.n, graph.m) == (2, 1)
        assert graph.original_ids == (5, 9)

    def test_from_pairs_matches_loader(self):
        pairs = [(10**9, 7), (7, 42), (42, 42), (42, 10**9), (7, 42)]
        text = "".join(f"{u} {v}\n" for u, v in pairs)
        assert Graph.from_pairs(pairs) == load(text)
        assert Graph.from_pairs(pairs).original_ids == (7, 42, 10**9)

    def test_adjacency_is_sorted_and_symmetric(self):
        graph = er_graph(14, 0.5, seed=3)
        for v, nbrs in enumerate(graph.adjacency):
            assert list(nbrs) == sorted(nbrs)
            for w in nbrs:
                assert v in graph.adjacency[w]

    def test_edge_ids_and_lookup(self, small_graphs):
        graph = small_graphs["k4"]
        assert graph.edge_id(2, 1) == graph.edge_id(1, 2)
        assert graph.has_edge(3, 0)
        with pytest.raises(KeyError):
            small_graphs["p3"].edge_id(0, 2)

    def test_degree_checks_range(self, small_graphs):
        assert small_graphs["star"].degree(0) == 3
        with pytest.raises(VertexRangeError):
            small_graphs["star"].degree(4)


class TestQueries:
    def test_common_neighbors_matches_brute_force(self):
        graph = er_graph(14, 0.5, seed=11)
        for u in range(graph.n):
            for v in range(graph.n):
                expected = tuple(sorted(set(graph.adjacency[u]) & set(graph.adjacency[v])))
                assert common_neighbors(graph, u, v) == expected

    def test_common_neighbors_range_error(self, small_graphs):
        with pytest.raises(VertexRangeError):
            common_neighbors(small_graphs["k3"], 0, 3)

    def test_induced_edge_count(self, small_graphs):
        assert induced_edge_count(small_graphs["k5"], range(5)) == 10
        assert induced_edge_count(small_graphs["k5"], [0, 1, 2]) == 3
        assert induced_edge_count(small_graphs["c5"], [0, 1, 2]) == 2
        assert induced_edge_count(small_graphs["c5"], []) == 0

    def test_vertex_set(self, small_graphs):
        assert vertex_set([3, 1, 3, 2]) == (1, 2, 3)
        with pytest.raises(VertexRangeError):
            vertex_set([0, 9], small_graphs["k3"])
