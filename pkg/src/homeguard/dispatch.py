"""Service directory, nearest-service ranking, incident reports and their store."""

from __future__ import annotations

import json
import logging
import math
import os
import threading
import uuid
import weakref
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterator, Mapping, Sequence

from .errors import NoSuchServiceType, NotEmergency, OutOfRangeCoordinate, StoreIoError
from .rdf import Iri
from .text import RawMessage
from .triage import SERVICE_TYPES, CrimeTaxonomy, TriageResult, default_taxonomy, triage

log = logging.getLogger(__name__)

EARTH_RADIUS_KM = 6371.0
DEFAULT_K = 3


def check_coordinate(lat: float, lon: float) -> None:
    if not (isinstance(lat, (int, float)) and isinstance(lon, (int, float))):
        raise OutOfRangeCoordinate(f"coordinates must be numbers, got {lat!r}, {lon!r}")
    if not (math.isfinite(lat) and math.isfinite(lon)) or not (-90 <= lat <= 90 and -180 <= lon <= 180):
        raise OutOfRangeCoordinate(f"coordinate out of range: ({lat}, {lon})")


def haversine_km(a: tuple[float, float], b: tuple[float, float], radius: float = EARTH_RADIUS_KM) -> float:
    """Great-circle distance between two (lat, lon) points in degrees."""
    check_coordinate(*a)
    check_coordinate(*b)
    p1, p2 = math.radians(a[0]), math.radians(b[0])
    dp = p2 - p1
    dl = math.radians(b[1] - a[1])
    h = math.sin(dp / 2) ** 2 + math.cos(p1) * math.cos(p2) * math.sin(dl / 2) ** 2
    return 2 * radius * math.asin(min(1.0, math.sqrt(h)))


@dataclass(frozen=True)
class SupportService:
    iri: Iri
    type: str
    name: str
    address: str
    phone: str
    latitude: float
    longitude: float

    def __post_init__(self):
        if self.type not in SERVICE_TYPES:
            raise ValueError(f"unknown service type {self.type!r}")
        if not self.phone.strip():
            raise ValueError(f"{self.iri.value}: phone is empty")
        check_coordinate(self.latitude, self.longitude)

    @property
    def location(self) -> tuple[float, float]:
        return (self.latitude, self.longitude)

    def to_dict(self) -> dict:
        return {
            "iri": self.iri.value,
            "type": self.type,
            "name": self.name,
            "address": self.address,
            "phone": self.phone,
            "latitude": self.latitude,
            "longitude": self.longitude,
        }

    @classmethod
    def from_dict(cls, d) -> "SupportService":
        return cls(Iri(d["iri"]), d["type"], d["name"], d["address"], d["phone"],
                   float(d["latitude"]), float(d["longitude"]))


class ServiceDirectory:
    """Concrete services materialized from the ontology graph."""

    def __init__(self, services: Sequence[SupportService]):
        self.services = tuple(sorted(services, key=lambda s: s.iri.value))

    @classmethod
    def from_taxonomy(cls, taxonomy: CrimeTaxonomy) -> "ServiceDirectory":
        services = []
        for kind in SERVICE_TYPES:
            rows = taxonomy.query(
                "SELECT ?s ?name ?addr ?phone ?lat ?lon WHERE { "
                f"?s a hg:{kind} . ?s hg:name ?name . ?s hg:address ?addr . ?s hg:phone ?phone . "
                "?s hg:latitude ?lat . ?s hg:longitude ?lon }"
            )
            for r in rows:
                services.append(SupportService(
                    r["s"], kind, r["name"].lexical, r["addr"].lexical, r["phone"].lexical,
                    float(r["lat"].to_python()), float(r["lon"].to_python()),
                ))
        return cls(services)

    def of_type(self, kind: str) -> list[SupportService]:
        return [s for s in self.services if s.type == kind]

    def __len__(self) -> int:
        return len(self.services)


_DIRECTORIES: "weakref.WeakKeyDictionary[CrimeTaxonomy, ServiceDirectory]" = weakref.WeakKeyDictionary()


def directory_for(taxonomy: CrimeTaxonomy) -> ServiceDirectory:
    if taxonomy not in _DIRECTORIES:
        _DIRECTORIES[taxonomy] = ServiceDirectory.from_taxonomy(taxonomy)
    return _DIRECTORIES[taxonomy]


def nearest_services(
    directory: ServiceDirectory, kind: str, location: tuple[float, float] | None, k: int = DEFAULT_K
) -> list[SupportService]:
    """The k closest services of one type; ties go to the smaller IRI.

    Without a location every service of the type is returned in IRI order.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    pool = directory.of_type(kind)
    if not pool:
        raise NoSuchServiceType(f"no services of type {kind!r}")
    if location is None:
        return pool
    check_coordinate(*location)
    ranked = sorted(pool, key=lambda s: (haversine_km(location, s.location), s.iri.value))
    return ranked[:k]


# --- reports -----------------------------------------------------------------------


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


def message_to_dict(m: RawMessage) -> dict:
    return {"id": m.id, "text": m.text, "received_at": m.received_at.isoformat()}


def message_from_dict(d) -> RawMessage:
    return RawMessage(d["text"], d["id"], datetime.fromisoformat(d["received_at"]))


@dataclass(frozen=True)
class IncidentReport:
    message: RawMessage
    result: TriageResult
    dispatched: Mapping[str, tuple[SupportService, ...]]
    location: tuple[float, float] | None = None
    id: str = field(default_factory=lambda: uuid.uuid4().hex)
    created_at: datetime = field(default_factory=_utcnow)

    def __post_init__(self):
        object.__setattr__(self, "dispatched", {k: tuple(v) for k, v in sorted(self.dispatched.items())})
        if set(self.dispatched) != set(self.result.service_types):
            raise ValueError("dispatched keys must equal the assigned service types")
        if self.location is not None:
            object.__setattr__(self, "location", (float(self.location[0]), float(self.location[1])))

    @property
    def needs_review(self) -> bool:
        """Prefilter passed but nothing was graded: a human should look."""
        return not self.result.service_types

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "created_at": self.created_at.isoformat(),
            "message": message_to_dict(self.message),
            "location": list(self.location) if self.location else None,
            "result": self.result.to_dict(),
            "dispatched": {k: [s.to_dict() for s in v] for k, v in self.dispatched.items()},
            "needs_review": self.needs_review,
        }

    @classmethod
    def from_dict(cls, d) -> "IncidentReport":
        return cls(
            message_from_dict(d["message"]),
            TriageResult.from_dict(d["result"]),
            {k: tuple(SupportService.from_dict(s) for s in v) for k, v in d["dispatched"].items()},
            tuple(d["location"]) if d.get("location") else None,
            d["id"],
            datetime.fromisoformat(d["created_at"]),
        )


def assemble_report(
    message: RawMessage,
    result: TriageResult,
    location: tuple[float, float] | None = None,
    k: int = DEFAULT_K,
    directory: ServiceDirectory | None = None,
) -> IncidentReport:
    directory = directory or directory_for(default_taxonomy())
    dispatched = {kind: tuple(nearest_services(directory, kind, location, k)) for kind in result.service_types}
    report = IncidentReport(message, result, dispatched, location)
    if report.needs_review:
        log.warning("report %s has no graded action; flagged for manual review", report.id)
    return report


# --- store -------------------------------------------------------------------------


class IncidentStore:
    """Append-only JSON-lines log of reports with an in-memory id index.

    Writes are serialized by a lock; reads see a consistent snapshot.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = os.fspath(path) if path is not None else None
        self._lock = threading.Lock()
        self._reports: list[IncidentReport] = []
        self._index: dict[str, IncidentReport] = {}

    @classmethod
    def load(cls, path: str | os.PathLike) -> "IncidentStore":
        store = cls(path)
        if not os.path.exists(store.path):
            return store
        try:
            with open(store.path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise StoreIoError(f"cannot read {store.path}: {exc}") from exc
        offset = 0
        lines = data.split(b"\n")
        for n, line in enumerate(lines):
            is_last = all(not rest.strip() for rest in lines[n + 1 :])
            if line.strip():
                try:
                    report = IncidentReport.from_dict(json.loads(line.decode("utf-8")))
                except (ValueError, KeyError, TypeError) as exc:
                    if not is_last:
                        raise StoreIoError(f"{store.path}: corrupt record on line {n + 1}") from exc
                    log.warning("%s: truncating corrupt trailing record on line %d", store.path, n + 1)
                    store._truncate(offset)
                    break
                if report.id in store._index:
                    raise StoreIoError(f"{store.path}: duplicate report id {report.id}")
                store._reports.append(report)
                store._index[report.id] = report
            offset += len(line) + 1
        return store

    def _truncate(self, size: int) -> None:
        try:
            with open(self.path, "r+b") as fh:
                fh.truncate(size)
        except OSError as exc:
            raise StoreIoError(f"cannot truncate {self.path}: {exc}") from exc

    def persist(self, report: IncidentReport) -> None:
        line = json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True)
        with self._lock:
            if report.id in self._index:
                raise StoreIoError(f"duplicate report id {report.id}")
            if self.path is not None:
                try:
                    with open(self.path, "a", encoding="utf-8") as fh:
                        fh.write(line + "\n")
                        fh.flush()
                        os.fsync(fh.fileno())
                except OSError as exc:
                    raise StoreIoError(f"cannot append to {self.path}: {exc}") from exc
            self._reports.append(report)
            self._index[report.id] = report

    def get(self, report_id: str) -> IncidentReport | None:
        return self._index.get(report_id)

    def __len__(self) -> int:
        return len(self._reports)

    def __iter__(self) -> Iterator[IncidentReport]:
        return iter(list(self._reports))


def persist(report: IncidentReport, store: IncidentStore) -> None:
    store.persist(report)


def load(path) -> IncidentStore:
    return IncidentStore.load(path)


class Dispatcher:
    """Triage, assemble and persist: the path shared by the CLI and the HTTP API."""

    def __init__(self, taxonomy: CrimeTaxonomy | None = None, store: IncidentStore | None = None, config=None):
        self.taxonomy = taxonomy or default_taxonomy()
        self.directory = directory_for(self.taxonomy)
        self.store = store if store is not None else IncidentStore()
        self.config = config

    def triage(self, text: str) -> TriageResult:
        return triage(RawMessage(text), self.taxonomy, self.config)

    def submit(self, text: str, location: tuple[float, float] | None = None, k: int = DEFAULT_K) -> IncidentReport:
        if location is not None:
            check_coordinate(*location)
        message = RawMessage(text)
        try:
            result = triage(message, self.taxonomy, self.config)
        except NotEmergency as exc:
            log.info("message %s rejected by prefilter: %s", message.id, exc.reason)
            raise
        report = assemble_report(message, result, location, k, self.directory)
        self.store.persist(report)
        return report
