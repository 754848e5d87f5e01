"""Sentence segmentation, normalization, clause splitting and sentence filters."""

from __future__ import annotations

import bisect
import enum
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .errors import EmptyMessage
from .tagger import BE_FORMS, DO_FORMS, HAVE_FORMS, SUBJECT_PRONOUNS, VERB_TAGS, Token, default_tagger, tokenize


@dataclass(frozen=True)
class RawMessage:
    text: str
    id: str = field(default_factory=lambda: uuid.uuid4().hex)
    received_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))


class Kind(str, enum.Enum):
    SIMPLE = "Simple"
    COMPOUND = "Compound"


class Status(str, enum.Enum):
    PASS = "Pass"
    QUESTION = "FilteredQuestion"
    UNCERTAIN = "FilteredUncertain"
    NEGATIVE = "FilteredNegative"
    EMPTY = "Empty"


@dataclass(frozen=True)
class FilterVerdict:
    status: Status
    reason: str = ""

    def __post_init__(self):
        if self.status is not Status.PASS and not self.reason:
            raise ValueError("a filtered verdict needs a reason")


PASS = FilterVerdict(Status.PASS)


@dataclass(frozen=True)
class Clause:
    span: tuple[int, int]
    tokens: tuple[Token, ...]
    connective_before: Token | None = None
    negated: bool = False
    quoted: bool = False

    @property
    def has_verb(self) -> bool:
        return any(t.tag in VERB_TAGS for t in self.tokens)


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    raw: str
    start: int
    tokens: tuple[Token, ...]
    clauses: tuple[Clause, ...]
    quoted_spans: tuple[tuple[int, int], ...] = ()
    verdict: FilterVerdict = PASS

    def __post_init__(self):
        if not self.clauses:
            raise ValueError("a sentence has at least one clause")

    @property
    def kind(self) -> Kind:
        return Kind.SIMPLE if len(self.clauses) == 1 else Kind.COMPOUND

    def clause_text(self, clause: Clause) -> str:
        return self.text[clause.span[0] : clause.span[1]]


# --- assets ------------------------------------------------------------------


def parse_word_list(lines: Iterable[str]) -> frozenset[str]:
    out = set()
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(line.lower())
    return frozenset(out)


def load_abbreviations(path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return parse_word_list(fh)


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    with resources.files("homeguard").joinpath("data", "abbreviations.txt").open(encoding="utf-8") as fh:
        return parse_word_list(fh)


# --- segmentation ----------------------------------------------------------------

TERMINATORS = ".!?"
OPEN_QUOTES = '"“'
CLOSE_QUOTES = '"”'
_TRAILERS = TERMINATORS + "\"”'’)]"


def _closing_quote(text: str, i: int) -> int:
    """Index of the quote closing the one at ``i`` on the same line, or -1."""
    closers = '"' if text[i] == '"' else '”"'
    j = i + 1
    while j < len(text) and text[j] != "\n":
        if text[j] in closers:
            return j
        j += 1
    return -1


def _is_abbreviation(text: str, dot: int, abbreviations) -> bool:
    j = dot
    while j > 0 and (text[j - 1].isalpha() or text[j - 1] == "."):
        j -= 1
    word = text[j : dot + 1].lower()
    return bool(word) and word in abbreviations


def _sentence_bounds(text: str, abbreviations) -> list[tuple[int, int]]:
    bounds = []
    start = i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in OPEN_QUOTES:
            close = _closing_quote(text, i)
            if close > 0:
                i = close + 1
                continue
        if ch == "\n":
            bounds.append((start, i))
            start = i = i + 1
            continue
        if ch in TERMINATORS:
            if ch == "." and 0 < i < n - 1 and text[i - 1].isdigit() and text[i + 1].isdigit():
                i += 1
                continue
            if ch == "." and _is_abbreviation(text, i, abbreviations):
                i += 1
                continue
            j = i + 1
            while j < n and text[j] in _TRAILERS:
                j += 1
            bounds.append((start, j))
            start = i = j
            continue
        i += 1
    bounds.append((start, n))
    out = []
    for a, b in bounds:
        while a < b and text[a].isspace():
            a += 1
        while b > a and text[b - 1].isspace():
            b -= 1
        if a < b:
            out.append((a, b))
    return out


# --- normalization ---------------------------------------------------------------


def _kept(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit() or ch.isspace() or ch in "'’-,"


def _strip_with_map(text: str) -> tuple[str, list[int]]:
    keep = [i for i, ch in enumerate(text) if _kept(ch)]
    alnum = [i for i in keep if text[i].isalnum()]
    if alnum:
        lo, hi = alnum[0], alnum[-1]
        keep = [i for i in keep if text[i] != "," or lo < i < hi]
    else:
        keep = [i for i in keep if text[i] != ","]
    return "".join(text[i] for i in keep), keep


def strip_specials(sentence_text: str) -> str:
    """Drop everything but letters, digits, whitespace, apostrophes, hyphens and inner commas."""
    return _strip_with_map(sentence_text)[0]


def mark_quoted_spans(sentence_text: str) -> list[tuple[int, int]]:
    """Character ranges strictly between paired double quotes.

    An opening quote with no partner runs to the end of the text.
    """
    spans = []
    i = 0
    n = len(sentence_text)
    while i < n:
        ch = sentence_text[i]
        if ch in OPEN_QUOTES:
            closers = '"' if ch == '"' else '”"'
            j = i + 1
            while j < n and sentence_text[j] not in closers:
                j += 1
            if j > i + 1:
                spans.append((i + 1, j))
            i = j + 1
            continue
        i += 1
    return spans


# --- clauses ------------------------------------------------------------------------

COORDINATORS = frozenset({"and", "but", "or", "so", "yet"})
SUBORDINATORS = frozenset(
    {"when", "whenever", "after", "because", "while", "if", "that", "though", "although", "before", "since", "until"}
)
_HARD = ";:()[]—–"


def _is_connective(tok: Token) -> bool:
    if tok.norm in COORDINATORS:
        return tok.tag == "CC"
    if tok.norm in SUBORDINATORS:
        return tok.tag in ("IN", "RB")
    return False


def _has_verb(tokens: Sequence[Token]) -> bool:
    return any(t.tag in VERB_TAGS for t in tokens)


def _hard_boundaries(raw: str, quoted: Sequence[tuple[int, int]]) -> list[int]:
    """Raw offsets that always separate clauses."""
    cuts = set()
    for i, ch in enumerate(raw):
        if ch in _HARD or ch in OPEN_QUOTES or ch in CLOSE_QUOTES:
            cuts.add(i)
        elif ch == "-":
            before = raw[i - 1] if i else " "
            after = raw[i + 1] if i + 1 < len(raw) else " "
            if before.isspace() or after.isspace():
                cuts.add(i)
    for a, b in quoted:
        cuts.update((a, b))
    return sorted(cuts)


def _is_soft_boundary(tok: Token) -> bool:
    return _is_connective(tok) or tok.surface == ","


def _verb_ahead(tokens: list[Token], i: int) -> bool:
    """A verb between ``i`` and the next boundary candidate (or the end)."""
    j = i + 1
    while j < len(tokens) and _is_soft_boundary(tokens[j]):
        j += 1
    while j < len(tokens) and not _is_soft_boundary(tokens[j]):
        if tokens[j].tag in VERB_TAGS:
            return True
        j += 1
    return False


def _split_soft(tokens: list[Token]) -> list[tuple[list[Token], Token | None]]:
    """Split at connectives and commas with a verb on both sides."""
    pieces = []
    conn = None
    start = 0
    if len(tokens) > 1 and _is_connective(tokens[0]):
        conn, start = tokens[0], 1
    i = start
    while i < len(tokens):
        tok = tokens[i]
        if _is_soft_boundary(tok) and i > start and _has_verb(tokens[start:i]) and _verb_ahead(tokens, i):
            pieces.append((tokens[start:i], conn))
            conn = None
            j = i
            while j < len(tokens) and _is_soft_boundary(tokens[j]):
                if tokens[j].surface != ",":
                    conn = tokens[j]
                j += 1
            start = i = j
            continue
        i += 1
    pieces.append((tokens[start:], conn))
    return pieces


def _trim(tokens: list[Token]) -> list[Token]:
    a, b = 0, len(tokens)
    while a < b and not any(c.isalnum() for c in tokens[a].surface):
        a += 1
    while b > a and not any(c.isalnum() for c in tokens[b - 1].surface):
        b -= 1
    return tokens[a:b]


NEGATORS = frozenset({"not", "n't", "never"})
NEGATIVE_PRONOUNS = frozenset({"nobody", "nothing", "none", "noone", "no-one"})


def detect_negation(clause: Clause) -> bool:
    """Clause-local negation.

    not / n't / never anywhere in the clause; nobody / nothing / none or the
    determiner "no" before the first verb or directly after the verb group.
    """
    toks = clause.tokens
    if any(t.norm in NEGATORS for t in toks):
        return True
    verbs = [i for i, t in enumerate(toks) if t.tag in VERB_TAGS or t.tag == "MD"]
    if not verbs:
        return False
    first = verbs[0]
    last = first
    while last + 1 < len(toks) and (toks[last + 1].tag in VERB_TAGS or toks[last + 1].tag in ("MD", "RB")):
        last += 1
    for i, t in enumerate(toks):
        if t.norm in NEGATIVE_PRONOUNS or (t.norm == "no" and t.tag == "DT"):
            if i < first or i == last + 1:
                return True
    return False


def _build_clauses(raw: str, text: str, keep: list[int], tokens: list[Token], quoted_norm) -> list[Clause]:
    cuts = [bisect.bisect_left(keep, c) for c in _hard_boundaries(raw, mark_quoted_spans(raw))]
    segments: list[list[Token]] = [[]]
    for tok in tokens:
        if segments[-1] and any(segments[-1][-1].end <= c <= tok.start for c in cuts):
            segments.append([])
        segments[-1].append(tok)
    clauses = []
    for seg in segments:
        seg = _trim(seg)
        if not seg:
            continue
        inside = any(a <= seg[0].start and seg[-1].end <= b for a, b in quoted_norm)
        pieces = [(seg, None)] if inside else _split_soft(seg)
        for toks, conn in pieces:
            toks = _trim(toks)
            if not toks:
                continue
            clause = Clause((toks[0].start, toks[-1].end), tuple(toks), conn, quoted=inside)
            clauses.append(clause if inside else Clause(clause.span, clause.tokens, conn, detect_negation(clause)))
    if not clauses:
        clauses.append(Clause((0, len(text)), ()))
    return clauses


# --- filters ---------------------------------------------------------------------------

WH_WORDS = frozenset({"what", "who", "whom", "whose", "which", "when", "where", "why", "how"})
AUX_WORDS = BE_FORMS | HAVE_FORMS | DO_FORMS
FUTURE_MODALS = frozenset({"will", "'ll", "wo", "shall", "might", "may", "could"})


def _content_tokens(sentence: Sentence) -> list[Token]:
    return [t for t in sentence.tokens if any(c.isalnum() for c in t.surface)]


def classify_question(sentence: Sentence) -> bool:
    """Terminal "?", a wh-word followed by an auxiliary or verb, or aux + pronoun inversion."""
    if sentence.raw.rstrip("\"”'’)] ").endswith("?"):
        return True
    toks = _content_tokens(sentence)
    if len(toks) < 2:
        return False
    first, second = toks[0], toks[1]
    if first.norm in WH_WORDS and (second.tag == "MD" or second.tag in VERB_TAGS):
        return True
    if (first.tag == "MD" or first.norm in AUX_WORDS) and second.tag == "PRP" and second.norm in SUBJECT_PRONOUNS:
        return True
    return False


def future_marked(tokens: Sequence[Token], i: int) -> bool:
    """Whether the verb at ``i`` is governed by a future or irrealis marker.

    Looks back over adverbs and negation to a modal, or to ``going to`` /
    ``gonna`` in front of a base form.
    """
    if tokens[i].tag != "VB":
        # "will be going": the marker governs the first verb of the group
        j = i - 1
        while j >= 0 and tokens[j].tag in VERB_TAGS | {"RB"}:
            if tokens[j].tag == "VB":
                return future_marked(tokens, j)
            j -= 1
        return False
    j = i - 1
    while j >= 0 and tokens[j].tag == "RB":
        j -= 1
    if j < 0:
        return False
    prev = tokens[j]
    if prev.tag == "MD" and prev.norm in FUTURE_MODALS:
        return True
    if prev.norm == "gonna":
        return True
    if prev.tag == "TO" and j > 0 and tokens[j - 1].norm == "going":
        return True
    return False


def main_verb_index(sentence: Sentence) -> int | None:
    """First verb of the first non-quoted clause, as an index into ``sentence.tokens``."""
    for clause in sentence.clauses:
        if clause.quoted:
            continue
        for tok in clause.tokens:
            if tok.tag in VERB_TAGS:
                return sentence.tokens.index(tok)
    return None


def detect_uncertain(sentence: Sentence) -> bool:
    """The main verb group is future-marked ("would" and "'d" are not markers)."""
    i = main_verb_index(sentence)
    if i is None:
        return False
    toks = sentence.tokens
    # the head of the main group may be a later verb ("will be", "is going to hit")
    end = i
    while end + 1 < len(toks) and toks[end + 1].tag in VERB_TAGS | {"RB"}:
        end += 1
    if any(future_marked(toks, k) for k in range(i, end + 1) if toks[k].tag in VERB_TAGS):
        return True
    if toks[end].norm == "going" and end + 2 < len(toks) and toks[end + 1].tag == "TO":
        return True
    return False


def verdict_for(sentence: Sentence) -> FilterVerdict:
    if not _content_tokens(sentence):
        return FilterVerdict(Status.EMPTY, "no words after normalization")
    if classify_question(sentence):
        return FilterVerdict(Status.QUESTION, "question sentence")
    if detect_uncertain(sentence):
        return FilterVerdict(Status.UNCERTAIN, "main verb is future or irrealis")
    live = [c for c in sentence.clauses if c.has_verb and not c.quoted]
    if live and all(c.negated for c in live):
        return FilterVerdict(Status.NEGATIVE, "every verb-bearing clause is negated")
    return PASS


def _as_text(message) -> str:
    return message.text if isinstance(message, RawMessage) else str(message)


def analyze_sentence(raw: str, index: int = 0, start: int = 0, abbreviations=None) -> Sentence:
    """Normalize, tokenize, tag and clause-split one raw sentence (no verdict)."""
    quoted_raw = mark_quoted_spans(raw)
    text, keep = _strip_with_map(raw)
    quoted = tuple(
        (bisect.bisect_left(keep, a), bisect.bisect_left(keep, b)) for a, b in quoted_raw
    )
    quoted = tuple((a, b) for a, b in quoted if a < b)
    tokens = default_tagger().tag(tokenize(text))
    clauses = _build_clauses(raw, text, keep, tokens, quoted)
    return Sentence(index, text, raw, start, tuple(tokens), tuple(clauses), quoted)


def split_sentences(message, abbreviations=None) -> list[Sentence]:
    """Segment a message into analyzed sentences (verdicts not yet applied)."""
    text = _as_text(message)
    if not text.strip():
        raise EmptyMessage("message is empty")
    abbreviations = default_abbreviations() if abbreviations is None else abbreviations
    return [
        analyze_sentence(text[a:b], k, a)
        for k, (a, b) in enumerate(_sentence_bounds(text, abbreviations))
    ]


def run_filters(message, abbreviations=None) -> list[Sentence]:
    out = []
    for s in split_sentences(message, abbreviations):
        out.append(Sentence(s.index, s.text, s.raw, s.start, s.tokens, s.clauses, s.quoted_spans, verdict_for(s)))
    return out
