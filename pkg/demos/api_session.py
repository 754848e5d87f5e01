"""Drive the HTTP API in-process: submit, fetch, look up services.

Run with:  python3 demos/api_session.py
"""

import json
import tempfile
import warnings
from pathlib import Path

warnings.filterwarnings("ignore", message="Using `httpx`")

from fastapi.testclient import TestClient  # noqa: E402

from homeguard.dispatch import Dispatcher, IncidentStore  # noqa: E402
from homeguard.server import create_app  # noqa: E402


def show(resp):
    body = resp.json()
    print(f"{resp.request.method} {resp.request.url.path} -> {resp.status_code}")
    print("   " + json.dumps(body, ensure_ascii=False)[:200] + ("..." if len(json.dumps(body)) > 200 else ""))


def main():
    with tempfile.TemporaryDirectory() as tmp:
        store_path = Path(tmp) / "incidents.jsonl"
        client = TestClient(create_app(Dispatcher(store=IncidentStore(store_path))))

        resp = client.post("/v1/reports", json={
            "message": "My uncle raped me. Nobody here in my home. Please help me.", "lat": 23.81, "lon": 90.42,
        })
        show(resp)
        report_id = resp.json()["id"]
        print("   services:", resp.json()["result"]["service_types"])

        show(client.get(f"/v1/reports/{report_id}"))
        show(client.get("/v1/reports/no-such-id"))
        show(client.post("/v1/reports", json={"message": "The weather is nice today."}))
        show(client.get("/v1/services", params={"type": "Hospital", "lat": 23.75, "lon": 90.39, "k": 2}))

        print(f"\nstore has {len(IncidentStore.load(store_path))} report(s) on disk")


if __name__ == "__main__":
    main()
