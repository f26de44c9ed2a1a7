"""
Tests for the benchmark table, digest cross-check and run ledger.
"""

import os

import pandas as pd
import pytest

from app.models.database import SessionLocal, init_db
from app.schemas.schemas import Algorithm, EdgeOrdering
from app.services.bench import BENCH_COLUMNS, check_digests, format_table, run_bench
from app.services.ledger import (
    RUN_COLUMNS, clear_runs, list_graphs, list_runs, record_graph, record_run, runs_frame,
)
from app.services.orderings import compute_stats
from app.services.runner import run_enumeration
from app.services.synth import generate, moon_moser, parse_gen_spec
from conftest import ba_graph


@pytest.fixture
def db():
    init_db()
    session = SessionLocal()
    clear_runs(session)
    try:
        yield session
    finally:
        clear_runs(session)
        session.close()


def test_bench_table_shape():
    graphs = [("mm9", moon_moser(9)), ("ba", ba_graph(80, 3, seed=1))]
    result = run_bench(graphs, [Algorithm.VBBMC, Algorithm.EBBMC, Algorithm.HBBMC], [0, 3], repeats=2)
    table = result.table
    assert list(table.columns) == BENCH_COLUMNS
    assert len(table) == 2 * 3 * 2
    assert len(result.reports) == len(table)
    assert set(table[table["graph"] == "mm9"]["cliques"]) == {27}
    assert (table["median_ms"] >= 0).all()
    assert check_digests(table) == (True, None)


def test_check_digests_names_the_pair():
    table = pd.DataFrame([
        {"graph": "g", "algorithm": "vbbmc", "et": 3, "digest": "0" * 16},
        {"graph": "g", "algorithm": "hbbmc", "et": 0, "digest": "f" * 16},
    ])
    ok, message = check_digests(table)
    assert not ok
    assert "vbbmc/et=3" in message and "hbbmc/et=0" in message


def test_format_table_is_tsv():
    result = run_bench([("k4", generate(parse_gen_spec("k:n=4")))], [Algorithm.HBBMC], [3],
                       edge_ordering=EdgeOrdering.MINDEGREE)
    lines = format_table(result.table).splitlines()
    assert lines[0].split("\t") == BENCH_COLUMNS
    row = dict(zip(BENCH_COLUMNS, lines[1].split("\t")))
    assert row["graph"] == "k4"
    assert row["edge_ordering"] == "mindegree"
    assert row["cliques"] == "1"


def test_ledger_round_trip(db):
    graph = moon_moser(6)
    stats = compute_stats(graph)
    graph_record = record_graph(db, "mm6", stats)
    for algorithm in (Algorithm.VBBMC, Algorithm.HBBMC):
        record_run(db, graph_record, run_enumeration(graph, algorithm, 3))

    runs = list_runs(db)
    assert [r.algorithm for r in runs] == ["hbbmc", "vbbmc"]
    assert all(r.clique_count == 9 for r in runs)
    assert runs[0].graph.name == "mm6"

    frame = runs_frame(db)
    assert list(frame.columns) == RUN_COLUMNS
    assert len(frame) == 2
    assert frame["clique_digest"].nunique() == 1

    assert [g.name for g in list_graphs(db)] == ["mm6"]

    assert clear_runs(db) == 2
    assert list_runs(db) == []
    assert list_graphs(db) == []


@pytest.mark.skipif(os.getenv("MCE_RUN_SLOW") != "1", reason="set MCE_RUN_SLOW=1 for large-graph smoke tests")
def test_large_barabasi_albert_smoke(record_property, capsys):
    graph = generate(parse_gen_spec("ba:n=50000,rho=10,seed=1"))
    result = run_bench([("ba-50000", graph)], [Algorithm.VBBMC, Algorithm.HBBMC], [3])
    table = result.table.set_index("algorithm")

    assert check_digests(result.table) == (True, None)
    hybrid = next(r for _, r in result.reports if r.algorithm == Algorithm.HBBMC)
    assert hybrid.max_level1_candidates <= compute_stats(graph).tau

    calls = {a: int(table.loc[a, "recursive_calls"]) for a in ("vbbmc", "hbbmc")}
    elapsed = {a: float(table.loc[a, "median_ms"]) for a in ("vbbmc", "hbbmc")}
    for algorithm in calls:
        record_property(f"{algorithm}_recursive_calls", calls[algorithm])
        record_property(f"{algorithm}_elapsed_ms", elapsed[algorithm])
    record_property("hbbmc_calls_at_most_vbbmc", calls["hbbmc"] <= calls["vbbmc"])
    with capsys.disabled():
        print()
        print(format_table(result.table[["algorithm", "et", "median_ms", "recursive_calls",
                                         "et_fired", "cliques"]]))
