import pytest
from fastapi.testclient import TestClient

from homeguard.dispatch import Dispatcher, IncidentStore, directory_for, haversine_km
from homeguard.errors import StoreIoError
from homeguard.server import create_app
from homeguard.triage import default_taxonomy

ROW1 = "My husband come home drunk and hit me every day. I need help."


@pytest.fixture
def client(tmp_path):
    dispatcher = Dispatcher(store=IncidentStore(tmp_path / "incidents.jsonl"))
    return TestClient(create_app(dispatcher))


def test_post_row1(client):
    resp = client.post("/v1/reports", json={"message": ROW1, "lat": 23.78, "lon": 90.41})
    assert resp.status_code == 201
    body = resp.json()
    assert body["result"]["service_types"] == ["Hospital", "Lawyer", "Police"]
    assert sorted(body["dispatched"]) == ["Hospital", "Lawyer", "Police"]
    assert all(len(v) <= 3 for v in body["dispatched"].values())


def test_get_report_round_trip(client):
    created = client.post("/v1/reports", json={"message": ROW1}).json()
    resp = client.get(f"/v1/reports/{created['id']}")
    assert resp.status_code == 200
    assert resp.json() == created


def test_get_unknown_report(client):
    assert client.get("/v1/reports/does-not-exist").status_code == 404


def test_services_near_known_station(client):
    stations = directory_for(default_taxonomy()).of_type("Police")
    for station in stations:
        resp = client.get("/v1/services", params={"type": "Police", "lat": station.latitude, "lon": station.longitude})
        assert resp.status_code == 200
        assert resp.json()["services"][0]["iri"] == station.iri.value


def test_services_ranked(client):
    resp = client.get("/v1/services", params={"type": "Hospital", "lat": 23.75, "lon": 90.39, "k": 10})
    services = resp.json()["services"]
    dists = [haversine_km((23.75, 90.39), (s["latitude"], s["longitude"])) for s in services]
    assert dists == sorted(dists)


def test_not_emergency(client):
    resp = client.post("/v1/reports", json={"message": "The weather is nice today."})
    assert resp.status_code == 422
    body = resp.json()
    assert body["error"] == "NotEmergency" and body["reason"] and body["matched"] == []


@pytest.mark.parametrize(
    "payload",
    [
        b"not json",
        b"[1, 2]",
        b'{"text": "help"}',
        b'{"message": 5}',
        b'{"message": "   "}',
        b'{"message": "help", "lat": 200, "lon": 0}',
        b'{"message": "help", "lat": 23.0}',
        b'{"message": "help", "lat": "x", "lon": 1}',
        b'{"message": "help", "k": 0}',
    ],
)
def test_bad_request(client, payload):
    resp = client.post("/v1/reports", content=payload, headers={"content-type": "application/json"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "BadRequest"


@pytest.mark.parametrize(
    "params, status",
    [
        ({"type": "Zoo", "lat": 23.8, "lon": 90.4}, 404),
        ({"lat": 23.8, "lon": 90.4}, 400),
        ({"type": "Police", "lat": 123, "lon": 90.4}, 400),
        ({"type": "Police", "lat": "north", "lon": 90.4}, 400),
        ({"type": "Police", "lat": "nan", "lon": 90.4}, 400),
        ({"type": "Police", "k": "-1"}, 400),
        ({"type": "Police"}, 200),
    ],
)
def test_services_params(client, params, status):
    assert client.get("/v1/services", params=params).status_code == status


def test_store_failure_is_500(tmp_path):
    class Broken(IncidentStore):
        def persist(self, report):
            raise StoreIoError("disk full")

    client = TestClient(create_app(Dispatcher(store=Broken())))
    resp = client.post("/v1/reports", json={"message": ROW1})
    assert resp.status_code == 500


def test_health(client):
    assert client.get("/v1/health").json() == {"status": "ok"}


def test_reports_persist_to_disk(tmp_path, client):
    client.post("/v1/reports", json={"message": ROW1})
    assert len(IncidentStore.load(tmp_path / "incidents.jsonl")) == 1
