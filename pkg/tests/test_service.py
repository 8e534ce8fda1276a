"""Tests for the HTTP service: every endpoint, the unresolved path for
budget overruns, and the 400 mapping for invalid inputs."""
import pytest
from fastapi.testclient import TestClient

from lt1span import __version__
from lt1span.service import app

client = TestClient(app)

P3_TEXT = "p edge 3 2\ne 1 2\ne 2 3\n"


# --------------------------------------------------------------- health

def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


# ----------------------------------------------------------------- span

def test_span_exact_from_dimacs():
    resp = client.post("/span", json={"dimacs": P3_TEXT, "tset": "0,1"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    result = body["result"]
    assert list(result.keys()) == ["lambda", "method", "colours", "tset",
                                   "sigma", "nodes_explored", "elapsed_ms"]
    assert result["lambda"] == 3
    assert result["method"] == "exact"
    assert result["tset"] == [0, 1]
    assert result["sigma"] == 0
    assert max(result["colours"]) == 3


def test_span_exact_from_family_with_list_tset():
    resp = client.post("/span", json={"family": "star:3", "tset": [0, 2]})
    assert resp.status_code == 200
    assert resp.json()["result"]["lambda"] == 4


def test_span_brute_method():
    resp = client.post("/span", json={"family": "path:3", "tset": "0,1",
                                      "method": "brute"})
    assert resp.status_code == 200
    result = resp.json()["result"]
    assert result["lambda"] == 3
    assert result["method"] == "brute_force"


def test_span_greedy_method():
    resp = client.post("/span", json={"family": "cycle:4", "tset": "0,1",
                                      "method": "greedy", "order": "id_asc"})
    assert resp.status_code == 200
    result = resp.json()["result"]
    assert result["method"] == "greedy"
    assert result["lambda"] >= 4  # true span; greedy may exceed it


def test_span_binary_strategy():
    resp = client.post("/span", json={"family": "cycle:5", "tset": "0,1,2",
                                      "strategy": "binary"})
    assert resp.status_code == 200
    assert resp.json()["result"]["lambda"] == 6


def test_span_requires_exactly_one_graph_source():
    assert client.post("/span", json={"tset": "0"}).status_code == 422
    assert client.post("/span", json={"dimacs": P3_TEXT, "family": "star:2",
                                      "tset": "0"}).status_code == 422


def test_span_rejects_bad_tset():
    resp = client.post("/span", json={"dimacs": P3_TEXT, "tset": "1,2"})
    assert resp.status_code == 400
    assert "must contain 0" in resp.json()["detail"]


def test_span_rejects_bad_dimacs():
    resp = client.post("/span", json={"dimacs": "p edge 2 1\ne 1 5\n",
                                      "tset": "0"})
    assert resp.status_code == 400
    assert "out of range" in resp.json()["detail"]


def test_span_rejects_bad_family():
    resp = client.post("/span", json={"family": "wheel:5", "tset": "0"})
    assert resp.status_code == 400


def test_span_budget_overrun_is_unresolved_not_error():
    resp = client.post("/span", json={"family": "kpartite:3,3",
                                      "tset": "0,1,2,3",
                                      "budget_nodes": 100})
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "unresolved"
    assert "result" not in body  # excluded when None
    info = body["unresolved"]
    assert info["lower_bound"] <= info["upper_bound"]
    assert info["nodes_explored"] == 101
    assert "budget exhausted" in info["reason"]


def test_span_brute_ceiling_is_unresolved():
    resp = client.post("/span", json={"family": "complete:3",
                                      "tset": "0,1,2", "method": "brute",
                                      "max_span": 5})
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "unresolved"
    assert body["unresolved"]["lower_bound"] == 6  # ceiling + 1
    assert "upper_bound" not in body["unresolved"]


def test_span_greedy_random_without_seed_is_400():
    resp = client.post("/span", json={"family": "path:3", "tset": "0",
                                      "method": "greedy", "order": "random"})
    assert resp.status_code == 400
    assert "requires a seed" in resp.json()["detail"]


# ---------------------------------------------------------------- check

def test_check_valid():
    resp = client.post("/check", json={"dimacs": P3_TEXT, "tset": "0,1",
                                       "colours": [0, 3, 1]})
    assert resp.status_code == 200
    assert resp.json() == {"valid": True, "violations": []}


def test_check_invalid_reports_violations():
    resp = client.post("/check", json={"dimacs": P3_TEXT, "tset": "0,1",
                                       "colours": [1, 0, 1]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["valid"] is False
    assert body["violations"] == [
        {"kind": "AdjacentDiffInT", "u": 0, "v": 1, "detail": 1},
        {"kind": "AdjacentDiffInT", "u": 1, "v": 2, "detail": 1},
        {"kind": "DistanceTwoEqual", "u": 0, "v": 2, "detail": 1},
    ]


def test_check_colour_count_mismatch_is_400():
    resp = client.post("/check", json={"dimacs": P3_TEXT, "tset": "0",
                                       "colours": [0, 1]})
    assert resp.status_code == 400
    assert "covers 2 vertices" in resp.json()["detail"]


def test_check_negative_colour_is_400():
    resp = client.post("/check", json={"dimacs": P3_TEXT, "tset": "0",
                                       "colours": [0, -1, 2]})
    assert resp.status_code == 400


# ------------------------------------------------------------ construct

def test_construct_star():
    resp = client.post("/construct", json={"family": "star:3", "tset": "0,1,3"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["family"] == "star:3"
    assert body["colours"] == [0, 2, 4, 5]
    assert body["c_span"] == 5
    assert body["valid"] is True
    assert body["prediction"] == {"mode": "exact", "value": 5}
    assert "upper_bound" not in body


def test_construct_star_strict_upper_mode():
    resp = client.post("/construct", json={"family": "star:1", "tset": "0,2"})
    assert resp.status_code == 200
    assert resp.json()["prediction"]["mode"] == "strict_upper_bound"


def test_construct_kpartite():
    resp = client.post("/construct", json={"family": "kpartite:2,1,1",
                                           "tset": "0"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["colours"] == [0, 3, 1, 2]
    assert body["upper_bound"] == 3
    assert body["valid"] is True
    assert "prediction" not in body


def test_construct_other_families_rejected():
    resp = client.post("/construct", json={"family": "path:4", "tset": "0"})
    assert resp.status_code == 400
    assert "star:<n> and kpartite:<sizes>" in resp.json()["detail"]


def test_construct_single_part_kpartite_rejected():
    resp = client.post("/construct", json={"family": "kpartite:4", "tset": "0"})
    assert resp.status_code == 400
    assert "two parts" in resp.json()["detail"]


# ----------------------------------------------------------- complement

def test_complement_endpoint():
    resp = client.post("/complement", json={"dimacs": P3_TEXT, "tset": "0,1",
                                            "colours": [0, 3, 1], "j": 2})
    assert resp.status_code == 200
    assert resp.json() == {"colours": [5, 2, 4], "original_span": 3,
                           "complement_span": 5, "valid": True}


def test_complement_rejects_invalid_input_colouring():
    resp = client.post("/complement", json={"dimacs": P3_TEXT, "tset": "0,1",
                                            "colours": [0, 1, 2]})
    assert resp.status_code == 400
    assert "complement not emitted" in resp.json()["detail"]


def test_complement_rejects_negative_shift():
    resp = client.post("/complement", json={"dimacs": P3_TEXT, "tset": "0,1",
                                            "colours": [0, 3, 1], "j": -1})
    assert resp.status_code == 422  # schema-level constraint


# ---------------------------------------------------------------- audit

def test_audit_endpoint_small_stars():
    resp = client.post("/audit", json={"suite": "stars", "max_r": 2,
                                       "max_n": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["suite"] == "stars"
    assert body["summary"] == {"instances": 16, "agreed": 14,
                               "discrepancies": 2, "unresolved": 0}
    rec = body["records"][0]
    assert list(rec.keys()) == ["instance", "claim", "predicted", "exact",
                                "agree", "notes"]


def test_audit_endpoint_rejects_oversize_grid():
    resp = client.post("/audit", json={"suite": "stars", "max_r": 9})
    assert resp.status_code == 400
    assert "beyond guard limit" in resp.json()["detail"]


def test_audit_endpoint_budget_unresolved():
    resp = client.post("/audit", json={"suite": "stars", "max_r": 2,
                                       "max_n": 3, "budget_nodes": 5})
    assert resp.status_code == 200
    assert resp.json()["summary"]["unresolved"] > 0
