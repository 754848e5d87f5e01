"""Emergency prefilter, crime-level grading and service resolution."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .actions import ActionExtractor, ActionMention, default_extractor
from .errors import NotEmergency, UnknownLevel
from .rdf import Graph, Iri, Literal, evaluate, load_turtle, materialize_types, parse_turtle
from .rdf.terms import escape_string
from .tagger import VERB_TAGS, Token
from .text import RawMessage, Sentence, parse_word_list, run_filters

HG = "http://homeguard.example/ontology#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
SERVICE_TYPES = ("Hospital", "Lawyer", "NGO", "Police")
_PREFIXES = f"PREFIX hg: <{HG}>\nPREFIX rdfs: <{RDFS}>\n"


@dataclass(frozen=True, order=True)
class CrimeLevel:
    ordinal: int
    iri: Iri

    def __post_init__(self):
        if self.ordinal not in (1, 2, 3):
            raise ValueError(f"crime level ordinal must be 1..3, got {self.ordinal}")

    @property
    def name(self) -> str:
        return _local(self.iri)

    def to_dict(self) -> dict:
        return {"ordinal": self.ordinal, "iri": self.iri.value}

    @classmethod
    def from_dict(cls, d) -> "CrimeLevel":
        return cls(int(d["ordinal"]), Iri(d["iri"]))


def _local(iri: Iri) -> str:
    return iri.value.rsplit("#", 1)[-1].rsplit("/", 1)[-1]


class CrimeTaxonomy:
    """Read-only view of the ontology graph used for grading."""

    def __init__(self, graph: Graph, namespace: str = HG):
        self.ns = namespace
        self.prefixes = f"PREFIX hg: <{namespace}>\nPREFIX rdfs: <{RDFS}>\n"
        if not graph.frozen:
            materialize_types(graph)
            graph.freeze()
        self.graph = graph
        rows = self.query("SELECT ?t ?l WHERE { ?t rdfs:subClassOf hg:Violence . ?t hg:lemma ?l }")
        self.terms = {row["l"].lexical: row["t"] for row in rows}
        self.levels = {}
        for row in self.query("SELECT ?l ?o WHERE { ?l rdfs:subClassOf hg:CrimeLevel . ?l hg:ordinal ?o }"):
            level = CrimeLevel(int(row["o"].to_python()), row["l"])
            self.levels[level.ordinal] = level
        self._check()

    def _check(self):
        for lemma, node in self.terms.items():
            found = self.query(f"SELECT ?lvl WHERE {{ {node.n3()} hg:hasCrimeLevel ?lvl }}")
            if len(found) != 1:
                raise ValueError(f"violence term {lemma!r} needs exactly one crime level, has {len(found)}")
            if not any(lv.iri == found[0]["lvl"] for lv in self.levels.values()):
                raise ValueError(f"violence term {lemma!r} points at an undeclared level {found[0]['lvl'].value}")
        for level in self.levels.values():
            if not self.services_for_level(level):
                raise ValueError(f"{level.name} has no services")

    @classmethod
    def from_file(cls, path) -> "CrimeTaxonomy":
        return cls(load_turtle(path))

    @classmethod
    def from_text(cls, text: str) -> "CrimeTaxonomy":
        return cls(parse_turtle(text))

    def query(self, sparql: str):
        return evaluate(self.graph, self.prefixes + sparql)

    @property
    def canonicals(self) -> frozenset[str]:
        return frozenset(self.terms)

    def level_of_action(self, lemma: str) -> CrimeLevel | None:
        node = self.terms.get(lemma)
        if node is None:
            return None
        rows = self.query(f"SELECT ?lvl WHERE {{ {node.n3()} hg:hasCrimeLevel ?lvl }}")
        if not rows:
            return None
        return self.level_from_iri(rows[0]["lvl"])

    def level_from_iri(self, iri: Iri) -> CrimeLevel:
        for level in self.levels.values():
            if level.iri == iri:
                return level
        raise UnknownLevel(f"no crime level {iri.value}")

    def level(self, ordinal: int) -> CrimeLevel:
        try:
            return self.levels[ordinal]
        except KeyError:
            raise UnknownLevel(f"no crime level with ordinal {ordinal}") from None

    def services_for_level(self, level: CrimeLevel | int) -> frozenset[str]:
        if isinstance(level, int):
            level = self.level(level)
        if not self.graph.find(level.iri, None, None):
            raise UnknownLevel(f"crime level {level.iri.value} is not in the graph")
        rows = self.query(f"SELECT ?svc WHERE {{ {level.iri.n3()} hg:hasService ?svc }}")
        return frozenset(_local(row["svc"]) for row in rows)

    def lemmas_at(self, ordinal: int) -> list[str]:
        return sorted(l for l in self.terms if (lv := self.level_of_action(l)) and lv.ordinal == ordinal)


@lru_cache(maxsize=1)
def default_taxonomy() -> CrimeTaxonomy:
    with resources.files("homeguard").joinpath("data", "ontology.ttl").open(encoding="utf-8") as fh:
        return CrimeTaxonomy(parse_turtle(fh.read()))


def load_taxonomy(path=None) -> CrimeTaxonomy:
    return default_taxonomy() if path is None else CrimeTaxonomy.from_file(path)


def max_level(levels: Iterable[CrimeLevel]) -> CrimeLevel | None:
    return max(levels, key=lambda lv: lv.ordinal, default=None)


def level_of_action(lemma: str, taxonomy: CrimeTaxonomy | None = None) -> CrimeLevel | None:
    return (taxonomy or default_taxonomy()).level_of_action(lemma)


def services_for_level(level, taxonomy: CrimeTaxonomy | None = None) -> frozenset[str]:
    return (taxonomy or default_taxonomy()).services_for_level(level)


# --- prefilter ---------------------------------------------------------------------


@dataclass(frozen=True)
class EmergencyFilterConfig:
    keywords: frozenset[str] = frozenset({"help", "911", "aid", "ambulance", "police", "save", "rescue"})
    threshold: int = 0

    def __post_init__(self):
        if self.threshold < 0:
            raise ValueError("threshold must be >= 0")
        object.__setattr__(self, "keywords", frozenset(k.lower() for k in self.keywords))

    def terms(self, taxonomy: CrimeTaxonomy) -> frozenset[str]:
        return self.keywords | taxonomy.canonicals


def parse_config(text: str, base: Path | None = None) -> EmergencyFilterConfig:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"line {lineno}: expected key = value")
        values[key.strip().lower()] = value.strip()
    unknown = set(values) - {"threshold", "keywords", "keywords_file"}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    keywords: set[str] = set()
    if "keywords_file" in values:
        path = Path(values["keywords_file"])
        if not path.is_absolute() and base is not None:
            path = base / path
        if base is None and not path.is_absolute():
            path = resources.files("homeguard").joinpath("data", str(path))
        with path.open(encoding="utf-8") as fh:
            keywords |= parse_word_list(fh)
    if "keywords" in values:
        keywords |= {k.strip().lower() for k in values["keywords"].split(",") if k.strip()}
    kwargs = {"threshold": int(values.get("threshold", 0))}
    if keywords:
        kwargs["keywords"] = frozenset(keywords)
    return EmergencyFilterConfig(**kwargs)


def load_config(path) -> EmergencyFilterConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), path.parent)


@lru_cache(maxsize=1)
def default_config() -> EmergencyFilterConfig:
    text = resources.files("homeguard").joinpath("data", "triage.conf").read_text(encoding="utf-8")
    return parse_config(text)


def token_lemmas(tokens: Iterable[Token], extractor: ActionExtractor | None = None) -> list[str]:
    """Canonical lemmas for verbs, lowercase forms for everything else."""
    extractor = extractor or default_extractor()
    out = []
    for tok in tokens:
        if tok.tag in VERB_TAGS:
            out.append(extractor.lemma_of(tok))
        elif any(c.isalnum() for c in tok.surface):
            out.append(tok.norm)
    return out


def prefilter_matches(lemmas: Iterable[str], config: EmergencyFilterConfig, taxonomy: CrimeTaxonomy) -> list[str]:
    terms = config.terms(taxonomy)
    return sorted({l for l in lemmas if l in terms})


def emergency_prefilter(lemmas: Iterable[str], config: EmergencyFilterConfig | None = None,
                        taxonomy: CrimeTaxonomy | None = None) -> bool:
    """True iff the number of distinct matching lemmas exceeds the threshold."""
    config = config or default_config()
    taxonomy = taxonomy or default_taxonomy()
    return len(prefilter_matches(lemmas, config, taxonomy)) > config.threshold


# --- results -------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedAction:
    lemma: str
    level: CrimeLevel
    surface: str = ""
    sentence_index: int = 0

    def to_dict(self) -> dict:
        return {"lemma": self.lemma, "level": self.level.to_dict(), "surface": self.surface,
                "sentence_index": self.sentence_index}

    @classmethod
    def from_dict(cls, d) -> "GradedAction":
        return cls(d["lemma"], CrimeLevel.from_dict(d["level"]), d.get("surface", ""), d.get("sentence_index", 0))


@dataclass(frozen=True)
class SentenceTrace:
    index: int
    text: str
    status: str
    reason: str


@dataclass(frozen=True)
class MentionTrace:
    lemma: str
    surface: str
    sentence_index: int
    clause_span: tuple[int, int]
    subject: str
    realization: str
    level: int | None
    dropped: str | None

    @classmethod
    def from_dict(cls, d) -> "MentionTrace":
        return cls(**{**d, "clause_span": tuple(d["clause_span"])})


@dataclass(frozen=True)
class Trace:
    sentences: tuple[SentenceTrace, ...] = ()
    mentions: tuple[MentionTrace, ...] = ()
    prefilter_matches: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "sentences": [vars(s).copy() for s in self.sentences],
            "mentions": [{**vars(m), "clause_span": list(m.clause_span)} for m in self.mentions],
            "prefilter_matches": list(self.prefilter_matches),
        }

    @classmethod
    def from_dict(cls, d) -> "Trace":
        return cls(
            tuple(SentenceTrace(**s) for s in d.get("sentences", ())),
            tuple(MentionTrace.from_dict(m) for m in d.get("mentions", ())),
            tuple(d.get("prefilter_matches", ())),
        )


@dataclass(frozen=True)
class TriageResult:
    actions: tuple[GradedAction, ...]
    max_level: CrimeLevel | None
    service_types: frozenset[str]
    trace: Trace = field(default_factory=Trace)

    def __post_init__(self):
        object.__setattr__(self, "service_types", frozenset(self.service_types))
        if bool(self.service_types) != (self.max_level is not None):
            raise ValueError("service_types must be empty exactly when max_level is absent")

    def to_dict(self) -> dict:
        return {
            "actions": [a.to_dict() for a in self.actions],
            "max_level": self.max_level.to_dict() if self.max_level else None,
            "service_types": sorted(self.service_types),
            "trace": self.trace.to_dict(),
        }

    @classmethod
    def from_dict(cls, d) -> "TriageResult":
        return cls(
            tuple(GradedAction.from_dict(a) for a in d["actions"]),
            CrimeLevel.from_dict(d["max_level"]) if d.get("max_level") else None,
            frozenset(d["service_types"]),
            Trace.from_dict(d.get("trace", {})),
        )


def grade(mentions: Sequence[ActionMention], taxonomy: CrimeTaxonomy) -> list[GradedAction]:
    graded = []
    for m in mentions:
        level = taxonomy.level_of_action(m.lemma)
        if level is not None:
            graded.append(GradedAction(m.lemma, level, m.surface, m.sentence_index))
    return graded


def triage(
    message,
    taxonomy: CrimeTaxonomy | None = None,
    config: EmergencyFilterConfig | None = None,
    extractor: ActionExtractor | None = None,
) -> TriageResult:
    """Filter, extract, grade and resolve services for one message.

    Raises EmptyMessage for blank input and NotEmergency when the prefilter
    rejects the message.
    """
    taxonomy = taxonomy or default_taxonomy()
    config = config or default_config()
    extractor = extractor or default_extractor()
    sentences: list[Sentence] = run_filters(message)
    lemmas = token_lemmas((t for s in sentences for t in s.tokens), extractor)
    matched = prefilter_matches(lemmas, config, taxonomy)
    if len(matched) <= config.threshold:
        raise NotEmergency(
            f"found {len(matched)} emergency keyword(s), need more than {config.threshold}", matched
        )
    candidates = extractor.candidates(sentences)
    kept = [m for m, dropped in candidates if dropped is None]
    actions = grade(kept, taxonomy)
    top = max_level(a.level for a in actions)
    services = taxonomy.services_for_level(top) if top else frozenset()
    trace = Trace(
        tuple(SentenceTrace(s.index, s.text, s.verdict.status.value, s.verdict.reason) for s in sentences),
        tuple(
            MentionTrace(
                m.lemma, m.surface, m.sentence_index, m.clause_span, m.subject.value, m.realization.value,
                lv.ordinal if (lv := taxonomy.level_of_action(m.lemma)) else None, dropped,
            )
            for m, dropped in candidates
        ),
        tuple(matched),
    )
    return TriageResult(tuple(actions), top, services, trace)
