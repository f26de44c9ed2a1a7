"""
test_api.py - Tests for the Clique Enumerator HTTP API

Runs the FastAPI app in-process through TestClient against an in-memory
run ledger (see conftest.py).
"""

import pytest
from fastapi.testclient import TestClient

from app.main import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as test_client:
        test_client.delete("/api/runs/clear")
        yield test_client


def test_health(client):
    """Test: Health check"""
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "OK"


def test_root_lists_endpoints(client):
    """Test: API info"""
    body = client.get("/").json()
    assert body["default_algorithm"] == "hbbmc"
    assert body["endpoints"]["enumerate"] == "POST /api/cliques/enumerate"


def test_unknown_endpoint(client):
    response = client.get("/api/nothing-here")
    assert response.status_code == 404
    assert response.json() == {"detail": "Endpoint not found"}


def test_enumerate_inline_edges(client):
    """Test: Enumerate cliques of an inline edge list"""
    payload = {"edges": [[0, 1], [1, 2], [2, 0], [2, 3]], "algorithm": "vbbmc", "output": "list"}
    response = client.post("/api/cliques/enumerate", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["report"]["clique_count"] == 2
    assert body["cliques"] == [[0, 1, 2], [2, 3]]
    assert body["run_id"] is None


def test_enumerate_inline_sparse_ids(client):
    """Test: Inline vertex ids are densified, not padded with isolated vertices"""
    payload = {"edges": [[5, 9], [9, 1000000000]], "output": "list", "record": True}
    response = client.post("/api/cliques/enumerate", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["report"]["clique_count"] == 2
    assert body["cliques"] == [[5, 9], [9, 1000000000]]
    assert (body["stats"]["n"], body["stats"]["m"]) == (3, 2)

    stats = client.post("/api/cliques/stats", json={"edges": [[5, 9]]}).json()
    assert (stats["n"], stats["m"]) == (2, 1)


def test_enumerate_generated_graph_and_record(client):
    """Test: Enumerate a generated graph and store the run"""
    payload = {"gen": "mm:n=9", "algorithm": "hbbmc", "et": 3, "record": True, "name": "moon-moser-9"}
    response = client.post("/api/cliques/enumerate", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["report"]["clique_count"] == 27
    assert len(body["report"]["clique_digest"]) == 16
    assert body["stats"]["delta"] == 6
    assert body["run_id"] is not None
    assert body["cliques"] is None


def test_digests_agree_across_engines(client):
    """Test: Every engine reports the same digest"""
    digests = set()
    for algorithm in ("vbbmc", "ebbmc", "hbbmc", "oracle"):
        payload = {"gen": "er:n=18,rho=3,seed=4", "algorithm": algorithm, "output": "digest"}
        digests.add(client.post("/api/cliques/enumerate", json=payload).json()["report"]["clique_digest"])
    assert len(digests) == 1


@pytest.mark.parametrize("payload", [
    {},
    {"edges": [[0, 1]], "gen": "k:n=3"},
    {"edges": [[0, 1]], "et": 4},
    {"edges": [[0, 1]], "algorithm": "bogus"},
])
def test_enumerate_rejects_invalid_requests(client, payload):
    """Test: Request validation"""
    response = client.post("/api/cliques/enumerate", json=payload)
    assert response.status_code == 422


@pytest.mark.parametrize("payload", [
    {"gen": "er:n=4,rho=9"},
    {"gen": "nope:n=3"},
    {"edges": [[-1, 2]]},
])
def test_enumerate_reports_bad_graphs(client, payload):
    response = client.post("/api/cliques/enumerate", json=payload)
    assert response.status_code == 400
    assert response.json()["detail"]


def test_stats(client):
    """Test: Graph statistics"""
    response = client.post("/api/cliques/stats", json={"gen": "k:n=5"})
    assert response.status_code == 200
    stats = response.json()
    assert (stats["n"], stats["m"], stats["delta"], stats["tau"]) == (5, 10, 4, 3)
    assert stats["rho"] == pytest.approx(2.0)
    assert stats["condition"] is False
    assert stats["triangles"] == 10


def test_upload_edge_list(client):
    """Test: Upload an edge-list file"""
    content = b"# bowtie\n10 11\n10 12\n11 12\n12 13\n12 14\n13 14\n"
    response = client.post(
        "/api/upload/edge-list",
        params={"algorithm": "ebbmc", "et": 2},
        files={"file": ("bowtie.txt", content, "text/plain")},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["filename"] == "bowtie.txt"
    assert body["stats"]["n"] == 5
    assert body["report"]["clique_count"] == 2
    assert body["report"]["algorithm"] == "ebbmc"
    assert body["run_id"] is not None


def test_upload_rejects_malformed_file(client):
    response = client.post(
        "/api/upload/edge-list",
        files={"file": ("bad.txt", b"0 1\n1\n", "text/plain")},
    )
    assert response.status_code == 400
    assert "line 2" in response.json()["detail"]


def test_list_and_export_runs(client):
    """Test: Run ledger listing and TSV export"""
    client.post("/api/cliques/enumerate", json={"gen": "k:n=4", "algorithm": "vbbmc", "record": True})

    runs = client.get("/api/runs").json()
    assert len(runs) >= 1
    assert runs[0]["algorithm"] == "vbbmc"
    assert runs[0]["clique_count"] == 1

    filtered = client.get("/api/runs", params={"algorithm": "hbbmc"}).json()
    assert all(run["algorithm"] == "hbbmc" for run in filtered)

    response = client.get("/api/export/runs.tsv")
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/tab-separated-values")
    lines = response.text.splitlines()
    assert lines[0].split("\t")[:3] == ["id", "graph", "n"]
    assert len(lines) == 1 + len(client.get("/api/runs", params={"limit": 1000}).json())


def test_list_graphs(client):
    """Test: Recorded graphs with their statistics"""
    client.post("/api/cliques/enumerate", json={"gen": "mm:n=6", "record": True, "name": "mm6"})
    graphs = client.get("/api/graphs").json()
    assert graphs[0]["name"] == "mm6"
    assert (graphs[0]["n"], graphs[0]["m"], graphs[0]["delta"], graphs[0]["tau"]) == (6, 9, 3, 0)
    assert len(client.get("/api/graphs", params={"limit": 1}).json()) == 1


def test_clear_runs(client):
    """Test: Clear the run ledger"""
    client.post("/api/cliques/enumerate", json={"gen": "k:n=3", "record": True})
    response = client.delete("/api/runs/clear")
    assert response.status_code == 200
    assert response.json()["deleted_runs"] >= 1
    assert client.get("/api/runs").json() == []
