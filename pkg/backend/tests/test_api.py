import math

import pytest
from fastapi.testclient import TestClient

from main import app

client = TestClient(app)


def test_health_check():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_evaluate_exponential():
    response = client.post("/api/v1/evaluate", json={"dist": "exponential", "params": {"theta": 1.0}, "x": [0.0, 1.0]})
    assert response.status_code == 200
    body = response.json()
    assert body["what"] == "pdf"
    assert body["values"][0] == pytest.approx(1.0)
    assert body["values"][1] == pytest.approx(math.exp(-1.0), rel=1e-15)


def test_evaluate_log_density_outside_support_is_a_string():
    response = client.post("/api/v1/evaluate", json={"dist": "gamma", "x": [-1.0], "what": "logpdf"})
    assert response.status_code == 200
    assert response.json()["values"] == ["-inf"]


def test_evaluate_unknown_name_is_404():
    response = client.post("/api/v1/evaluate", json={"dist": "gama", "x": [1.0]})
    assert response.status_code == 404
    assert "gamma" in response.json()["detail"]["suggestions"]


@pytest.mark.parametrize(
    "payload",
    [
        {"dist": "chi-square", "params": {"k": 2.5}, "x": [1.0]},
        {"dist": "normal", "x": [0.0]},
        {"dist": "exponential", "x": [1.5], "what": "quantile"},
    ],
)
def test_evaluate_rejected_input_is_400(payload):
    assert client.post("/api/v1/evaluate", json=payload).status_code == 400


def test_evaluate_validates_request_body():
    assert client.post("/api/v1/evaluate", json={"dist": "gamma", "x": []}).status_code == 422
    assert client.post("/api/v1/evaluate", json={"dist": "gamma", "x": [1.0], "what": "hazard"}).status_code == 422


def test_describe_levy():
    response = client.post("/api/v1/describe", json={"dist": "Levy", "params": {"a": 0.0, "c": 1.0}})
    assert response.status_code == 200
    body = response.json()
    assert body["name"] == "Lévy"
    assert body["family"] == "Amoroso"
    assert body["summary"]["mean"] is None
    assert body["summary"]["variance"] is None
    assert "Lévy" in body["matches"]


def test_describe_log_gamma_uses_lambda_key():
    response = client.post("/api/v1/describe", json={"dist": "standard Gumbel"})
    body = response.json()
    assert response.status_code == 200
    assert body["family"] == "LogGamma"
    assert body["parameters"] == {"nu": 0.0, "lambda": -1.0, "alpha": 1.0}
    assert body["summary"]["mean"] == pytest.approx(0.5772156649015329, rel=1e-13)
    assert body["matches"][0] == "standard Gumbel"


def test_sample_is_reproducible():
    payload = {"dist": "Rayleigh", "params": {"sigma": 2.0}, "n": 20, "seed": 9}
    first = client.post("/api/v1/sample", json=payload).json()
    second = client.post("/api/v1/sample", json=payload).json()
    assert first == second
    assert len(first["draws"]) == 20
    assert all(draw > 0.0 for draw in first["draws"])


def test_sample_limits():
    assert client.post("/api/v1/sample", json={"dist": "gamma", "n": 10_000_000}).status_code == 400
    assert client.post("/api/v1/sample", json={"dist": "gamma", "seed": -3}).status_code == 422


def test_curve_rows():
    response = client.post(
        "/api/v1/curve", json={"dist": "exponential", "start": 0.0, "stop": 2.0, "points": 5, "what": ["pdf", "cdf"]}
    )
    assert response.status_code == 200
    rows = response.json()["rows"]
    assert [row["x"] for row in rows] == [0.0, 0.5, 1.0, 1.5, 2.0]
    assert rows[2]["cdf"] == pytest.approx(1.0 - math.exp(-1.0), rel=1e-15)


def test_curve_reversed_grid_is_400():
    response = client.post("/api/v1/curve", json={"dist": "exponential", "start": 1.0, "stop": 0.0})
    assert response.status_code == 400


def test_catalog_routes():
    listing = client.get("/api/v1/catalog").json()
    assert any(entry["name"] == "Wien" for entry in listing)
    entry = client.get("/api/v1/catalog/Vinci").json()
    assert entry["name"] == "inverse gamma"
    missing = client.get("/api/v1/catalog/nonesuch")
    assert missing.status_code == 404


def test_check_limits_suite():
    response = client.post("/api/v1/check", json={"suite": "limits", "seed": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert len(body["reports"]) == 14
    assert body["metrics"]["suite"] == "limits"
    assert body["metrics"]["failed"] == 0
