"""HTTP interface over the dispatcher."""

from __future__ import annotations

import json
import logging
import math

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .dispatch import DEFAULT_K, Dispatcher, IncidentStore, nearest_services
from .errors import EmptyMessage, NoSuchServiceType, NotEmergency, OutOfRangeCoordinate, StoreIoError
from .triage import load_taxonomy

log = logging.getLogger(__name__)


class BadRequest(Exception):
    pass


def _error(status: int, kind: str, detail: str) -> JSONResponse:
    return JSONResponse({"error": kind, "detail": detail}, status_code=status)


def _number(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise BadRequest(f"{name} must be a finite number")
    return float(value)


def _location(lat, lon):
    if (lat is None) != (lon is None):
        raise BadRequest("lat and lon must be given together")
    if lat is None:
        return None
    return (_number(lat, "lat"), _number(lon, "lon"))


def _k(value):
    if value is None:
        return DEFAULT_K
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise BadRequest("k must be a positive integer")
    return value


def _parse_query_number(params, name, convert=float):
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return convert(raw)
    except ValueError:
        raise BadRequest(f"{name} is not a valid number") from None


def create_app(dispatcher: Dispatcher | None = None) -> FastAPI:
    dispatcher = dispatcher or Dispatcher()
    app = FastAPI(title="HomeGuard", version="0.1.0")
    app.state.dispatcher = dispatcher

    @app.exception_handler(BadRequest)
    async def _bad_request(request, exc):
        return _error(400, "BadRequest", str(exc))

    @app.post("/v1/reports")
    async def post_report(request: Request):
        try:
            body = json.loads(await request.body())
        except (ValueError, UnicodeDecodeError):
            raise BadRequest("body is not valid JSON") from None
        if not isinstance(body, dict) or not isinstance(body.get("message"), str):
            raise BadRequest("body must be an object with a string 'message'")
        location = _location(body.get("lat"), body.get("lon"))
        k = _k(body.get("k"))
        try:
            report = dispatcher.submit(body["message"], location, k)
        except EmptyMessage as exc:
            raise BadRequest(str(exc)) from None
        except OutOfRangeCoordinate as exc:
            raise BadRequest(str(exc)) from None
        except NotEmergency as exc:
            return JSONResponse(
                {"error": "NotEmergency", "reason": exc.reason, "matched": list(exc.matched)}, status_code=422
            )
        except StoreIoError as exc:
            log.error("store failure: %s", exc)
            return _error(500, "StoreIoError", str(exc))
        return JSONResponse(report.to_dict(), status_code=201)

    @app.get("/v1/reports/{report_id}")
    async def get_report(report_id: str):
        report = dispatcher.store.get(report_id)
        if report is None:
            return _error(404, "NotFound", f"no report {report_id}")
        return report.to_dict()

    @app.get("/v1/services")
    async def get_services(request: Request):
        params = request.query_params
        kind = params.get("type")
        if not kind:
            raise BadRequest("type is required")
        location = _location(_parse_query_number(params, "lat"), _parse_query_number(params, "lon"))
        k = _k(_parse_query_number(params, "k", int))
        try:
            found = nearest_services(dispatcher.directory, kind, location, k)
        except OutOfRangeCoordinate as exc:
            raise BadRequest(str(exc)) from None
        except NoSuchServiceType as exc:
            return _error(404, "NoSuchServiceType", str(exc))
        return {"type": kind, "services": [s.to_dict() for s in found]}

    @app.get("/v1/health")
    async def health():
        return {"status": "ok"}

    return app


def serve(port: int = 8000, ontology=None, store=None, host: str = "127.0.0.1") -> None:
    """Run the API until interrupted."""
    import uvicorn

    taxonomy = load_taxonomy(ontology)
    dispatcher = Dispatcher(taxonomy, IncidentStore.load(store) if store else IncidentStore())
    uvicorn.run(create_app(dispatcher), host=host, port=port)
