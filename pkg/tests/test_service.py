import numpy as np
import pytest
from fastapi.testclient import TestClient

from nldirac.service import create_app

SMALL_RUN = {
    "grid": {"x_min": -20.0, "x_max": 20.0, "n_points": 64},
    "dt": 0.01,
    "t_final": 0.1,
    "snapshot_times": [0.0, 0.05, 0.1],
}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"


class TestRunEndpoint:
    def test_small_run(self, client):
        response = client.post("/run", json=SMALL_RUN)
        assert response.status_code == 200
        body = response.json()
        assert len(body["snapshots"]) == 3
        assert [s["t"] for s in body["snapshots"]] == [0.0, 0.05, 0.1]
        assert len(body["x"]) == 64
        assert body["summary"]["charge_drift_rel"] <= 1e-10
        assert body["metadata"]["scheme"] == "rk4"
        assert "sqrt(m)" in body["metadata"]["units"]

    def test_exclude_fields(self, client):
        request = dict(SMALL_RUN, include_fields=False)
        body = client.post("/run", json=request).json()
        assert body["snapshots"] == []
        assert len(body["diagnostics"]) >= 2

    def test_strang_scheme(self, client):
        request = dict(SMALL_RUN, scheme="strang")
        body = client.post("/run", json=request).json()
        assert body["metadata"]["scheme"] == "strang"
        assert body["summary"]["charge_drift_rel"] <= 1e-13

    def test_default_request_is_reference_run(self, client):
        # don't run it (seconds); just check the schema defaults
        from nldirac.service.schemas import RunRequest

        request = RunRequest()
        assert request.coupling.mode == "spin-symmetric"
        assert request.coupling.alpha == 0.5
        assert request.snapshot_times == [0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]

    def test_invalid_mu_rejected(self, client):
        request = dict(SMALL_RUN, initial={"mu": -1.0})
        assert client.post("/run", json=request).status_code == 422

    def test_unknown_mode_rejected(self, client):
        request = dict(SMALL_RUN, coupling={"mode": "soler"})
        assert client.post("/run", json=request).status_code == 422

    def test_snapshot_beyond_t_final_rejected(self, client):
        request = dict(SMALL_RUN, snapshot_times=[0.0, 5.0])
        response = client.post("/run", json=request)
        assert response.status_code == 400
        assert response.json()["detail"]["type"] == "invalid-config"


class TestStationaryEndpoint:
    def test_attractive_profile(self, client):
        request = {
            "coupling": {"mode": "spin-symmetric", "alpha": -0.5},
            "omega": 0.8,
            "verify": False,
        }
        response = client.post("/stationary", json=request)
        assert response.status_code == 200
        body = response.json()
        assert body["a0"] == pytest.approx(np.sqrt(0.8), abs=1e-8)
        assert body["residual"] <= 1e-8
        assert len(body["profile_plus"]) == body["grid"]["n_points"]

    def test_no_solution_maps_to_conflict(self, client):
        request = {
            "coupling": {"mode": "spin-symmetric", "alpha": 0.5},
            "omega": 0.8,
            "verify": False,
        }
        response = client.post("/stationary", json=request)
        assert response.status_code == 409
        assert response.json()["detail"]["type"] == "no-solution-found"

    def test_pseudo_scalar_rejected(self, client):
        request = {
            "coupling": {"mode": "pseudo-scalar", "alpha": -0.5},
            "omega": 0.8,
            "verify": False,
        }
        response = client.post("/stationary", json=request)
        assert response.status_code == 400


class TestExponentsEndpoint:
    def test_reference_rows_present(self, client):
        body = client.get("/exponents").json()
        rows = {
            (r["field_kind"], r["dimension"]): (r["conformal_degree"], r["exponent"])
            for r in body["rows"]
        }
        assert rows[("spinor", 2)] == ("-1/2", "2")
        assert rows[("spinor", 3)] == ("-1", "1")
        assert rows[("spinor", 4)] == ("-3/2", "2/3")
        assert rows[("scalar", 4)] == ("-1", "2")
        assert rows[("scalar", 3)] == ("-1/2", "4")
        assert rows[("scalar", 2)][1] == "divergent"
        labels = [t["label"] for t in body["quartic_terms"]]
        assert labels == ["S^2", "W^2", "SW", "V^2"]

    def test_dimension_bounds(self, client):
        assert client.get("/exponents", params={"max_dimension": 1}).status_code == 400


class TestCheckEndpoint:
    def test_subset(self, client):
        response = client.post(
            "/check", json={"names": ["propagator-unitarity", "bilinear-identities"]}
        )
        body = response.json()
        assert body["passed"] is True
        assert len(body["results"]) == 2
