"""
Tests for the reference enumerators.
"""

import pytest

from app.services.errors import OracleCapacityError
from app.services.graph_core import Graph
from app.services.oracle import exhaustive_mce, reference_bk
from app.services.synth import moon_moser, path_graph


def test_exhaustive_examples(small_graphs):
    assert exhaustive_mce(small_graphs["k3"]) == [(0, 1, 2)]
    assert exhaustive_mce(small_graphs["three_isolated"]) == [(0,), (1,), (2,)]
    assert exhaustive_mce(small_graphs["p3"]) == [(0, 1), (1, 2)]
    assert exhaustive_mce(small_graphs["empty"]) == []


def test_complete_bipartite_has_only_edges(small_graphs):
    cliques = exhaustive_mce(small_graphs["k33"])
    assert len(cliques) == 9
    assert all(len(c) == 2 for c in cliques)


def test_capacity_limit():
    with pytest.raises(OracleCapacityError):
        exhaustive_mce(path_graph(21))
    assert len(exhaustive_mce(path_graph(8), max_n=8)) == len(reference_bk(path_graph(8)))


def test_reference_bk_on_moon_moser():
    assert len(reference_bk(moon_moser(12))) == 81


def test_oracles_agree(er_corpus, er_oracle):
    for name, graph in er_corpus:
        pivoted = reference_bk(graph)
        assert len(pivoted) == len(set(pivoted)), name
        assert set(pivoted) == er_oracle[name], name
        assert reference_bk(graph, pivot=False) == pivoted, name


def test_exhaustive_output_is_sorted_and_non_nested(er_corpus):
    for _, graph in er_corpus[:50]:
        cliques = exhaustive_mce(graph)
        assert cliques == sorted(cliques)
        members = [set(c) for c in cliques]
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                assert not a <= b and not b <= a


def test_isolated_vertices_are_cliques():
    graph = Graph.from_edges(4, [(1, 2)])
    assert exhaustive_mce(graph) == [(0,), (1, 2), (3,)]
    assert reference_bk(graph) == [(0,), (1, 2), (3,)]
