from fastapi.testclient import TestClient

from qpa.service.app import app

client = TestClient(app)


def test_health():
    assert client.get("/health").json() == {"status": "ok"}


def test_sector_endpoint():
    resp = client.post(
        "/sector",
        json={"shape": "2,0", "k": 1, "m": 2, "spectrum": "3/4,1/4"},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["fidelity"] == "9/13"
    assert body["environment"] == "0,0"


def test_sector_endpoint_with_environment():
    resp = client.post(
        "/sector",
        json={
            "shape": "2,0", "k": 1, "m": 1, "spectrum": "3/4,1/4",
            "environment": "1,0", "objective": "one",
        },
    )
    assert resp.json()["fidelity"] == "21/26"


def test_sector_rejects_bad_environment():
    resp = client.post(
        "/sector",
        json={"shape": "2,0", "k": 1, "m": 2, "spectrum": "3/4,1/4",
              "environment": "1,0"},
    )
    assert resp.status_code == 400
    assert "expected m=2" in resp.json()["detail"]


def test_overall_endpoint():
    resp = client.post(
        "/overall",
        json={"n": 2, "d": 2, "k": 1, "m": 1, "spectrum": "3/4,1/4"},
    )
    body = resp.json()
    assert body["overall"] == "3/4"
    assert len(body["sectors"]) == 2
    assert body["losses"]["trace"] == 0.25


def test_overall_float_mode():
    resp = client.post(
        "/overall",
        json={"n": 2, "d": 2, "k": 1, "m": 1, "spectrum": "3/4,1/4",
              "float_mode": True},
    )
    assert abs(resp.json()["overall"] - 0.75) < 1e-12


def test_overall_validation_error_is_422():
    resp = client.post(
        "/overall",
        json={"n": 0, "d": 2, "k": 1, "m": 1, "spectrum": "3/4,1/4"},
    )
    assert resp.status_code == 422


def test_degenerate_target_is_400():
    resp = client.post(
        "/overall",
        json={"n": 2, "d": 2, "k": 1, "m": 1, "spectrum": "1/2,1/2"},
    )
    assert resp.status_code == 400
    assert "degenerate" in resp.json()["detail"]


def test_asymptote_endpoint():
    resp = client.post(
        "/asymptote",
        json={"kind": "extensive", "spectrum": "3/4,1/4", "k": 1, "R": 0.25},
    )
    body = resp.json()
    assert abs(body["value"] - 0.8) < 1e-12
    assert body["extras"]["terminal_index"] == 1

    resp = client.post(
        "/asymptote",
        json={"kind": "all-bound", "spectrum": "3/4,1/4", "k": 1, "m": 1, "n": 100},
    )
    body = resp.json()
    assert body["valid"] is False and body["value"] > 0


def test_phase_diagram_endpoint():
    resp = client.post(
        "/phase-diagram",
        json={"family": "depolarized", "d": 3, "k": 1,
              "lambdas": [0.5], "rates": [0.1, 0.6]},
    )
    body = resp.json()
    assert len(body["rows"]) == 2
    assert set(body["rows"][0]) == {"lambda", "R", "fidelity", "phase"}


def test_phase_diagram_limit_endpoint():
    resp = client.post(
        "/phase-diagram",
        json={"family": "depolarized", "k": 1, "lambdas": [0.5], "rates": [0.2, 0.9]},
    )
    rows = resp.json()["rows"]
    assert rows[0]["phase"] == 0 and rows[1]["phase"] == -1


def test_responses_are_byte_identical():
    payload = {"n": 3, "d": 2, "k": 1, "m": 1, "spectrum": "3/4,1/4",
               "rule": "optimal"}
    first = client.post("/overall", json=payload).content
    second = client.post("/overall", json=payload).content
    assert first == second
    req = {"suite": "monotonicity", "cases": 30, "seed": 11}
    assert client.post("/verify", json=req).content == \
        client.post("/verify", json=req).content


def test_verify_endpoint():
    resp = client.post("/verify", json={"suite": "normalization", "max_n": 3})
    body = resp.json()
    assert body["passed"] is True
    resp = client.post("/verify", json={"suite": "nope"})
    assert resp.status_code == 400
