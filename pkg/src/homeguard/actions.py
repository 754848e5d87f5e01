"""Verb groups, subject attribution, realization and action mentions."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .lemmas import LemmaRules, SynsetTable, default_lemma_rules, default_synsets
from .tagger import (
    BE_FORMS,
    FINITE_TAGS,
    DO_FORMS,
    HAVE_FORMS,
    NOUN_TAGS,
    OBJECT_PRONOUNS,
    PARTICLES,
    SUBJECT_PRONOUNS,
    VERB_TAGS,
    Token,
)
from .text import Clause, Sentence, Status, future_marked


class Subject(str, enum.Enum):
    REPORTER = "Reporter"
    OTHER = "Other"
    UNKNOWN = "Unknown"


class Realization(str, enum.Enum):
    REALIZED = "Realized"
    ATTEMPTED = "Attempted"
    UNREALIZED = "Unrealized"


class Policy(str, enum.Enum):
    PROMOTE = "Promote"
    DEMOTE = "Demote"
    BLOCK = "Block"


@dataclass(frozen=True)
class CatenativePolicy:
    """How a matrix verb passes realization to its verbal complement."""

    table: Mapping[str, Policy] = field(
        default_factory=lambda: {
            **dict.fromkeys(("try", "attempt", "start", "begin", "keep", "continue"), Policy.PROMOTE),
            "threaten": Policy.DEMOTE,
            **dict.fromkeys(("stop", "prevent", "want", "wish", "hope"), Policy.BLOCK),
            # intentions that never entail the act
            **dict.fromkeys(("promise", "plan", "intend", "refuse", "avoid", "fail"), Policy.BLOCK),
        }
    )
    attempt_verbs: frozenset[str] = frozenset({"try", "attempt"})

    def __post_init__(self):
        object.__setattr__(self, "table", MappingProxyType({k: Policy(v) for k, v in self.table.items()}))

    def policy(self, matrix_lemma: str) -> Policy:
        return self.table.get(matrix_lemma, Policy.PROMOTE)


DEFAULT_POLICY = CatenativePolicy()

LIGHT_VERBS = frozenset({"give", "make", "issue", "send"})
LIGHT_NOUNS = {"threat": "threaten", "threats": "threaten"}
REPORTER_PRONOUNS = frozenset({"i", "we"})
_NP_TAGS = frozenset({"PRP", "PRP$", "DT", "JJ", "CD", "RB"}) | NOUN_TAGS
AUX_FORMS = BE_FORMS | HAVE_FORMS | DO_FORMS | {"'d"}


@dataclass(frozen=True)
class ActionMention:
    lemma: str
    surface: str
    sentence_index: int
    clause_span: tuple[int, int]
    subject: Subject
    realization: Realization


@dataclass(frozen=True)
class VerbGroup:
    """Contiguous modal/auxiliary/verb run with an optional phrasal particle."""

    tokens: tuple[Token, ...]
    particle: Token | None = None

    @property
    def verbs(self) -> tuple[Token, ...]:
        return tuple(t for t in self.tokens if t.tag in VERB_TAGS)

    @property
    def lexical(self) -> tuple[Token, ...]:
        """Verbs that are not auxiliaries; the last verb always counts."""
        verbs = self.verbs
        return tuple(
            v for k, v in enumerate(verbs) if k == len(verbs) - 1 or v.norm not in AUX_FORMS
        )

    @property
    def head(self) -> Token:
        return self.verbs[-1]

    @property
    def start(self) -> int:
        return self.tokens[0].start

    @property
    def end(self) -> int:
        return (self.particle or self.tokens[-1]).end

    @property
    def finite(self) -> bool:
        return any(t.tag in ("VBD", "VBP", "VBZ", "MD") for t in self.tokens)

    @property
    def passive(self) -> bool:
        verbs = self.verbs
        return len(verbs) >= 2 and verbs[-1].tag == "VBN" and verbs[-2].norm in BE_FORMS

    def surface(self, text: str) -> str:
        words = " ".join(t.surface for t in self.tokens)
        if self.particle is None:
            return words
        return _joined(text, self.tokens[-1], self.particle, words)


def _joined(text: str, left: Token, right: Token, words: str | None = None) -> str:
    """``run over`` when adjacent, ``run … over`` when an object intervenes."""
    words = left.surface if words is None else words
    sep = " … " if text[left.end : right.start].strip() else " "
    return words + sep + right.surface


def extract_verb_groups(sentence_or_tokens) -> list[VerbGroup]:
    """Verb groups of a tagged sentence, clause or token list, in order."""
    tokens = list(getattr(sentence_or_tokens, "tokens", sentence_or_tokens))
    groups = []
    i = 0
    while i < len(tokens):
        if tokens[i].tag not in VERB_TAGS and tokens[i].tag != "MD":
            i += 1
            continue
        j = i
        run = []
        while j < len(tokens) and (
            tokens[j].tag in VERB_TAGS or tokens[j].tag == "MD" or (tokens[j].tag == "RB" and tokens[j].norm not in PARTICLES)
        ):
            # a finite verb after a lexical one starts a new group ("to kill | is")
            verbs = [t for t in run if t.tag in VERB_TAGS]
            if tokens[j].tag in FINITE_TAGS | {"MD"} and verbs and verbs[-1].norm not in AUX_FORMS:
                break
            run.append(tokens[j])
            j += 1
        while run and run[-1].tag == "RB":
            run.pop()
            j -= 1
        particle = None
        if not any(t.tag in VERB_TAGS for t in run):
            i = j if j > i else i + 1
            continue
        if j < len(tokens) and tokens[j].norm in PARTICLES and tokens[j].tag in ("RB", "IN"):
            particle = tokens[j]
        elif (
            j + 1 < len(tokens)
            and tokens[j].norm in OBJECT_PRONOUNS
            and tokens[j + 1].norm in PARTICLES
            and tokens[j + 1].tag in ("RB", "IN")
        ):
            particle = tokens[j + 1]
        groups.append(VerbGroup(tuple(run), particle))
        i = max(j, i + 1)
    return groups


def _subject_class(tok: Token) -> Subject:
    return Subject.REPORTER if tok.norm in REPORTER_PRONOUNS else Subject.OTHER


def _object_position(tokens: Sequence[Token], k: int) -> bool:
    j = k - 1
    while j >= 0 and tokens[j].tag in {"DT", "PRP$", "JJ", "CD"} | NOUN_TAGS:
        j -= 1
    return j >= 0 and (tokens[j].tag in VERB_TAGS or tokens[j].tag in ("IN", "TO"))


def resolve_subject(group: VerbGroup, clause: Clause, fallback: Subject = Subject.UNKNOWN) -> Subject:
    """Nearest subject pronoun or noun before the group, else ``fallback``.

    Passive groups take their ``by`` agent instead; with no agent the
    subject is unknown.
    """
    toks = list(clause.tokens)
    if group.passive:
        after = [t for t in toks if t.start >= group.end]
        for k, t in enumerate(after[:-1]):
            if t.norm == "by":
                for cand in after[k + 1 : k + 5]:
                    if cand.tag == "PRP" or cand.tag in NOUN_TAGS:
                        return _subject_class(cand)
        return Subject.UNKNOWN
    before = [t for t in toks if t.end <= group.start]
    for k in range(len(before) - 1, -1, -1):
        t = before[k]
        if t.tag == "PRP" and t.norm in SUBJECT_PRONOUNS and not (
            t.norm in ("you", "it", "u") and _object_position(before, k)
        ):
            return _subject_class(t)
        if t.tag in NOUN_TAGS and not _object_position(before, k):
            return Subject.OTHER
        if t.tag == "DT" and (k + 1 == len(before) or before[k + 1].tag not in NOUN_TAGS | {"JJ", "CD"}):
            if not _object_position(before, k):
                return Subject.OTHER
    return fallback


@dataclass
class _Unit:
    """One lexical verb with what governs it."""

    token: Token
    group: VerbGroup
    clause_index: int
    lemma: str
    surface: str
    matrix: "_Unit | None" = None
    link: str | None = None
    coordinated_with: "_Unit | None" = None
    subject: Subject = Subject.UNKNOWN
    realization: Realization | None = None
    reason: str = ""


def _light_noun(clause_tokens: Sequence[Token], group: VerbGroup) -> Token | None:
    after = [t for t in clause_tokens if t.start >= group.end]
    for t in after[:4]:
        if t.norm in LIGHT_NOUNS:
            return t
        if t.tag not in _NP_TAGS:
            return None
    return None


def _complement_gap(clause_tokens, matrix: VerbGroup, group: VerbGroup) -> str | None:
    """Link type if ``group`` is a to-infinitive or gerund complement of ``matrix``."""
    gap = [t for t in clause_tokens if matrix.end <= t.start and t.end <= group.start]
    if group.particle is not None and matrix.particle is group.particle:
        return None
    while gap and gap[-1].tag == "RB":
        gap.pop()
    if not gap:
        return None
    marker = gap[-1]
    rest = gap[:-1]
    if len(rest) > 5 or any(t.tag not in _NP_TAGS for t in rest):
        return None
    if marker.tag == "TO" and group.verbs[0].tag == "VB":
        return "to"
    if marker.norm == "from" and group.verbs[0].tag == "VBG":
        return "from"
    return None


class ActionExtractor:
    def __init__(
        self,
        rules: LemmaRules | None = None,
        synsets: SynsetTable | None = None,
        policy: CatenativePolicy | None = None,
    ):
        self.rules = rules or default_lemma_rules()
        self.synsets = synsets or default_synsets()
        self.policy = policy or DEFAULT_POLICY

    def lemma_of(self, token: Token, particle: Token | None = None) -> str:
        base = self.rules.lemmatize(token.surface, token.tag or "VB")
        if particle is not None:
            phrase = f"{base} {particle.norm}"
            if phrase in self.synsets.phrasal:
                return self.synsets.canonicalize(phrase)
        return self.synsets.canonicalize(base)

    # -- units ---------------------------------------------------------------

    def _units(self, sentence: Sentence) -> list[_Unit]:
        units: list[_Unit] = []
        prev_clause_last: _Unit | None = None
        for ci, clause in enumerate(sentence.clauses):
            groups = extract_verb_groups(clause)
            clause_units: list[_Unit] = []
            for gi, group in enumerate(groups):
                lexical = group.lexical
                for k, tok in enumerate(lexical):
                    particle = group.particle if k == len(lexical) - 1 else None
                    unit = _Unit(tok, group, ci, self.lemma_of(tok, particle), tok.surface)
                    if particle is not None:
                        unit.surface = _joined(sentence.text, tok, particle)
                    if k == len(lexical) - 1 and self.rules.lemmatize(tok.surface, tok.tag) in LIGHT_VERBS:
                        noun = _light_noun(clause.tokens, group)
                        if noun is not None:
                            unit.lemma = self.synsets.canonicalize(LIGHT_NOUNS[noun.norm])
                            unit.surface = f"{tok.surface} … {noun.surface}"
                    if k > 0:
                        unit.matrix, unit.link = clause_units[-1], "gerund"
                    elif gi > 0 and not group.finite:
                        link = _complement_gap(clause.tokens, groups[gi - 1], group)
                        if link:
                            unit.matrix, unit.link = clause_units[-1], link
                    if (
                        unit.matrix is None
                        and gi == 0
                        and k == 0
                        and not group.finite
                        and group.verbs[0].tag == "VB"
                        and clause.connective_before is not None
                        and clause.connective_before.tag == "CC"
                        and prev_clause_last is not None
                        and not any(t.end <= group.start and t.tag in {"PRP", "TO"} | NOUN_TAGS for t in clause.tokens)
                    ):
                        unit.coordinated_with = prev_clause_last
                    clause_units.append(unit)
            units.extend(clause_units)
            if clause_units and not clause.quoted:
                prev_clause_last = clause_units[-1]
        return units

    def _realize(self, unit: _Unit, sentence: Sentence) -> tuple[Realization, str]:
        if unit.matrix is not None:
            m, why = self._realize(unit.matrix, sentence)
            matrix = unit.matrix
            if matrix.token.norm in ("going", "gonna") and unit.link == "to":
                return Realization.UNREALIZED, "future (going to)"
            policy = self.policy.policy(matrix.lemma)
            if policy is Policy.BLOCK:
                return Realization.UNREALIZED, f"blocked by {matrix.lemma!r}"
            if policy is Policy.DEMOTE:
                return Realization.UNREALIZED, f"demoted under {matrix.lemma!r}"
            if m is Realization.UNREALIZED:
                return m, why
            if matrix.lemma in self.policy.attempt_verbs:
                return Realization.ATTEMPTED, f"attempted via {matrix.lemma!r}"
            return m, why
        if unit.coordinated_with is not None:
            return self._realize(unit.coordinated_with, sentence)
        group = unit.group
        toks = sentence.tokens
        first = toks.index(group.verbs[0])
        if future_marked(toks, first) or any(
            t.tag == "MD" and t.norm in ("will", "'ll", "wo", "shall", "might", "may", "could") for t in group.tokens
        ):
            return Realization.UNREALIZED, "future or irrealis marker"
        if group.finite:
            return Realization.REALIZED, ""
        return Realization.UNREALIZED, "non-finite verb without a governing verb"

    # -- public ----------------------------------------------------------------

    def candidates(self, sentences: Iterable[Sentence]) -> list[tuple[ActionMention, str | None]]:
        """Every verb-derived mention with the reason it was dropped (None if kept)."""
        out = []
        last_subject = Subject.UNKNOWN
        for sentence in sentences:
            units = self._units(sentence)
            subjects: dict[int, Subject] = {}
            for unit in units:
                clause = sentence.clauses[unit.clause_index]
                if unit.matrix is not None:
                    unit.subject = unit.matrix.subject
                elif unit.coordinated_with is not None and id(unit.group) not in subjects:
                    unit.subject = resolve_subject(unit.group, clause, unit.coordinated_with.subject)
                else:
                    if id(unit.group) not in subjects:
                        subjects[id(unit.group)] = resolve_subject(unit.group, clause, last_subject)
                    unit.subject = subjects[id(unit.group)]
                subjects.setdefault(id(unit.group), unit.subject)
                if not clause.quoted and not unit.group.passive:
                    last_subject = unit.subject
                realization, why = self._realize(unit, sentence)
                mention = ActionMention(
                    unit.lemma, unit.surface, sentence.index, clause.span, unit.subject, realization
                )
                out.append((mention, self._drop_reason(sentence, clause, mention, why)))
        return out

    @staticmethod
    def _drop_reason(sentence: Sentence, clause: Clause, mention: ActionMention, why: str) -> str | None:
        if sentence.verdict.status is not Status.PASS:
            return f"sentence {sentence.verdict.status.value}"
        if clause.quoted:
            return "quoted speech"
        if clause.negated:
            return "negated clause"
        if mention.subject is Subject.REPORTER:
            return "reporter is the subject"
        if mention.realization is Realization.UNREALIZED:
            return f"unrealized: {why}"
        return None

    def extract(self, sentences: Iterable[Sentence]) -> list[ActionMention]:
        return [m for m, dropped in self.candidates(sentences) if dropped is None]


_DEFAULT: ActionExtractor | None = None


def default_extractor() -> ActionExtractor:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = ActionExtractor()
    return _DEFAULT


def extract_actions(sentences: Iterable[Sentence], extractor: ActionExtractor | None = None) -> list[ActionMention]:
    return (extractor or default_extractor()).extract(sentences)


def classify_realization(sentence: Sentence, lemma: str, extractor: ActionExtractor | None = None) -> Realization | None:
    """Realization of the first mention of ``lemma`` in a filtered sentence."""
    for mention, _ in (extractor or default_extractor()).candidates([sentence]):
        if mention.lemma == lemma:
            return mention.realization
    return None
