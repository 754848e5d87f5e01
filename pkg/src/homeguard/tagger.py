"""Lexicon-and-rules part-of-speech tagger.

Tags come from a reduced Penn Treebank set. A token is tagged in three
stages: the lexicon's first-ranked tag, suffix guesses for unknown words,
and then a fixed sequence of contextual repair rules, each of which visits
every token once (left to right) and may change its tag at most once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import LexiconFormatError

TAGS = frozenset(
    "NN NNS NNP PRP PRP$ VB VBD VBG VBN VBP VBZ MD JJ RB IN CC DT TO CD UH SYM OTHER".split()
)
VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP"})
FINITE_TAGS = frozenset({"VBD", "VBP", "VBZ"})

SUBJECT_PRONOUNS = frozenset({"i", "you", "he", "she", "it", "we", "they", "who", "u"})
OBJECT_PRONOUNS = frozenset({"me", "him", "her", "us", "them", "you", "it", "u", "myself", "himself", "herself"})
DO_FORMS = frozenset({"do", "does", "did"})
HAVE_FORMS = frozenset({"have", "has", "had", "'ve", "having"})
BE_FORMS = frozenset({"am", "is", "are", "was", "were", "be", "been", "being", "'s", "'re", "'m"})
PARTICLES = frozenset({"up", "out", "off", "down", "over", "away", "back", "around"})
CLITICS = ("n't", "'d", "'s", "'ll", "'re", "'ve", "'m")

_TOKEN_RE = re.compile(r"\d+(?:[.,:]\d+)*|\w+(?:[-'’]\w+)*|[^\w\s]", re.UNICODE)


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    tag: str | None = None
    lemma: str | None = None

    @property
    def end(self) -> int:
        return self.start + len(self.surface)

    @property
    def norm(self) -> str:
        """Lowercased surface with typographic apostrophes straightened."""
        return self.surface.lower().replace("’", "'")

    @property
    def is_verb(self) -> bool:
        return self.tag in VERB_TAGS


class TagLexicon:
    """Immutable word -> ranked tag list mapping (lookups are lowercase)."""

    def __init__(self, entries: Mapping[str, Sequence[str]]):
        self._entries = MappingProxyType({k.lower(): tuple(v) for k, v in entries.items()})
        self.verb_bases = frozenset(w for w, tags in self._entries.items() if "VB" in tags)
        self.nouns = frozenset(w for w, tags in self._entries.items() if "NN" in tags)

    def __contains__(self, word) -> bool:
        return word.lower().replace("’", "'") in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def tags(self, word: str) -> tuple[str, ...]:
        return self._entries.get(word.lower().replace("’", "'"), ())

    @property
    def entries(self) -> Mapping[str, tuple[str, ...]]:
        return self._entries


def _data_path(name):
    return resources.files("homeguard").joinpath("data", name)


def parse_lexicon(lines: Iterable[str]) -> TagLexicon:
    entries: dict[str, list[str]] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2 or not parts[1].strip():
            raise LexiconFormatError("missing tag column", lineno)
        word = parts[0].strip()
        if not word:
            raise LexiconFormatError("empty word", lineno)
        tags = [t.strip() for t in parts[1].split(",") if t.strip()]
        if not tags:
            raise LexiconFormatError("missing tag column", lineno)
        bad = [t for t in tags if t not in TAGS]
        if bad:
            raise LexiconFormatError(f"unknown tag {bad[0]!r}", lineno)
        merged = entries.setdefault(word.lower(), [])
        merged.extend(t for t in tags if t not in merged)
    return TagLexicon(entries)


def load_lexicon(path) -> TagLexicon:
    """Read a ``word<TAB>TAG1,TAG2`` file. Duplicate words merge in file order."""
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh)


@lru_cache(maxsize=1)
def default_lexicon() -> TagLexicon:
    with _data_path("lexicon.tsv").open(encoding="utf-8") as fh:
        return parse_lexicon(fh)


def _split_clitic(word: str, start: int) -> list[Token]:
    low = word.lower().replace("’", "'")
    if low.endswith("n't") and len(word) > 3:
        return [Token(word[:-3], start), Token(word[-3:], start + len(word) - 3)]
    for clitic in CLITICS[1:]:
        if low.endswith(clitic) and len(word) > len(clitic):
            cut = len(word) - len(clitic)
            return [Token(word[:cut], start), Token(word[cut:], start + cut)]
    return [Token(word, start)]


def tokenize(sentence_text: str) -> list[Token]:
    """Split on whitespace and punctuation; detach clitics; keep hyphenated words."""
    tokens = []
    for m in _TOKEN_RE.finditer(sentence_text):
        word = m.group()
        if "'" in word or "’" in word:
            tokens.extend(_split_clitic(word, m.start()))
        else:
            tokens.append(Token(word, m.start()))
    return tokens


class Tagger:
    def __init__(self, lexicon: TagLexicon | None = None):
        self.lexicon = lexicon or default_lexicon()

    # -- stage 1 and 2 -----------------------------------------------------

    def guess(self, token: Token, first: bool) -> str:
        word = token.surface
        low = token.norm
        tags = self.lexicon.tags(low)
        if tags:
            return tags[0]
        if not any(ch.isalnum() for ch in word):
            return "SYM"
        if word[0].isdigit():
            return "CD"
        if word[0].isupper() and not first:
            return "NNP"
        if low.endswith("ing") and len(low) > 4:
            return "VBG"
        if low.endswith("ed") and len(low) > 3:
            return "VBD"
        if low.endswith("ly") and len(low) > 3:
            return "RB"
        if low.endswith("s") and not low.endswith("ss") and len(low) > 2:
            stems = {low[:-1], low[:-2], low[:-3] + "y"}
            if stems & self.lexicon.verb_bases:
                return "VBZ"
            if stems & self.lexicon.nouns:
                return "NNS"
        if any(ch.isalpha() for ch in word):
            return "NN"
        return "OTHER"

    def readings(self, token: Token) -> tuple[str, ...]:
        tags = self.lexicon.tags(token.norm)
        if tags:
            return tags
        if token.tag in ("VBD", "VBN"):
            return ("VBD", "VBN")
        return (token.tag,)

    # -- stage 3 -------------------------------------------------------------

    def tag(self, tokens: Sequence[Token]) -> list[Token]:
        first = next((i for i, t in enumerate(tokens) if any(c.isalpha() for c in t.surface)), 0)
        out = [replace(t, tag=self.guess(t, i == first)) for i, t in enumerate(tokens)]
        for rule in _RULES:
            for i in range(len(out)):
                new = rule(self, out, i)
                if new and new != out[i].tag:
                    out[i] = replace(out[i], tag=new)
        return out


def _prev(tokens, i, skip=("RB",)):
    """Index of the previous token, skipping adverbs (including n't / not)."""
    j = i - 1
    while j >= 0 and tokens[j].tag in skip:
        j -= 1
    return j


def _verb_reading(tagger, tok, prefer=("VBD", "VBP", "VBZ", "VB", "VBN", "VBG")):
    readings = tagger.readings(tok)
    for tag in prefer:
        if tag in readings:
            return tag
    return None


def _rule_that_her_s(tagger, tokens, i):
    tok = tokens[i]
    nxt = tokens[i + 1] if i + 1 < len(tokens) else None
    if tok.norm == "that" and nxt is not None:
        if nxt.norm in SUBJECT_PRONOUNS or nxt.tag in ("NNP", "DT", "PRP$"):
            return "IN"
    if tok.norm == "her":
        if nxt is not None and nxt.tag in ("NN", "NNS", "JJ", "CD", "NNP"):
            return "PRP$"
        return "PRP"
    if tok.norm == "'s" and i > 0:
        prev = tokens[i - 1].norm
        if prev in SUBJECT_PRONOUNS or prev in ("that", "what", "there", "here", "where", "how"):
            return "VBZ"
        return "OTHER"
    if tok.norm == "'d":
        j = i + 1
        while j < len(tokens) and tokens[j].tag == "RB":
            j += 1
        if j < len(tokens):
            readings = tagger.readings(tokens[j])
            if "VBN" in readings and "VB" not in readings:
                return "VBD"
        return "MD"
    return None


def _rule_determiner(tagger, tokens, i):
    """DT/PRP$ _ : a verb-tagged word with a noun reading becomes a noun."""
    if i == 0 or tokens[i - 1].tag not in ("DT", "PRP$"):
        return None
    tok = tokens[i]
    if tok.norm == "one" and tokens[i - 1].norm in ("no", "every", "any", "some", "each"):
        return "NN"
    if tok.tag not in ("NN", "NNS", "NNP", "JJ", "CD"):
        readings = tagger.readings(tok)
        for tag in ("NN", "NNS"):
            if tag in readings:
                return tag
    return None


def _rule_infinitive(tagger, tokens, i):
    """TO _ : base form when the word has one."""
    j = _prev(tokens, i)
    if j < 0 or tokens[j].tag != "TO" or j == i:
        return None
    if "VB" in tagger.readings(tokens[i]):
        return "VB"
    return None


def _rule_modal(tagger, tokens, i):
    """MD _ and do-support _ : base form."""
    j = _prev(tokens, i)
    if j < 0:
        return None
    prev = tokens[j]
    if prev.norm == "please" and "VB" in tagger.readings(tokens[i]):
        return "VB"
    if prev.tag == "MD" or (prev.norm in DO_FORMS and prev.is_verb and j < i - 1 and tokens[j + 1].tag == "RB"):
        if "VB" in tagger.readings(tokens[i]):
            return "VB"
    if prev.norm in DO_FORMS and j == i - 1 and "VB" in tagger.readings(tokens[i]) and tokens[i].is_verb:
        return "VB"
    return None


def _rule_perfect_passive(tagger, tokens, i):
    """have/be _ : past participle where the word has one."""
    j = _prev(tokens, i)
    if j < 0:
        return None
    prev = tokens[j]
    readings = tagger.readings(tokens[i])
    if "VBN" not in readings:
        return None
    if prev.norm in HAVE_FORMS and prev.is_verb:
        return "VBN"
    if prev.norm == "'d" and prev.tag == "VBD":
        return "VBN"
    if prev.norm in BE_FORMS and prev.is_verb and tokens[i].is_verb and tokens[i].tag != "VBG":
        return "VBN"
    return None


def _rule_subject(tagger, tokens, i):
    """PRP(subject) _ : a noun/verb ambiguous word takes a finite verb reading.

    A base form directly after a noun is also read as present tense.
    """
    j = _prev(tokens, i)
    if j < 0:
        return None
    tok = tokens[i]
    if tokens[j].tag in NOUN_TAGS and tok.tag == "VB" and j == i - 1:
        # "my husband come home": a bare base form after a noun is present tense
        return "VBP" if "VBP" in tagger.readings(tok) else None
    if tokens[j].norm not in SUBJECT_PRONOUNS:
        return None
    if tok.tag in ("VBG", "VBN", "MD") or tok.norm in ("'s", "'d", "'ll", "'re", "'m", "'ve"):
        return None
    readings = tagger.readings(tok)
    if not VERB_TAGS & set(readings):
        return None
    k = _prev(tokens, j, skip=())
    if k >= 0 and (tokens[k].tag == "MD" or tokens[k].norm in DO_FORMS or tokens[k].norm in BE_FORMS):
        # inverted question: "did he hit", "will she stab"
        return "VB" if "VB" in readings else None
    if tok.tag in FINITE_TAGS:
        return None
    third = tokens[j].norm in ("he", "she", "it", "who")
    prefer = ("VBD", "VBZ", "VBP", "VB") if third else ("VBD", "VBP", "VB")
    return _verb_reading(tagger, tok, prefer)


def _rule_coordination(tagger, tokens, i):
    """CC _ obj : a coordinated verb copies the form of the previous verb."""
    if i == 0 or tokens[i - 1].tag != "CC" or i + 1 >= len(tokens):
        return None
    nxt = tokens[i + 1]
    if not (nxt.norm in OBJECT_PRONOUNS or nxt.tag in ("PRP$", "DT")):
        return None
    readings = tagger.readings(tokens[i])
    if not VERB_TAGS & set(readings):
        return None
    for k in range(i - 2, -1, -1):
        if tokens[k].is_verb and tokens[k].tag != "VBG":
            if tokens[k].tag in readings:
                return tokens[k].tag
            break
    return None if tokens[i].is_verb else _verb_reading(tagger, tokens[i], ("VB", "VBP", "VBD"))


def _rule_object_follows(tagger, tokens, i):
    """_ obj : an ambiguous noun/verb directly before an object pronoun is a verb."""
    if i + 1 >= len(tokens) or tokens[i].is_verb:
        return None
    if tokens[i + 1].norm not in OBJECT_PRONOUNS - {"it", "you"}:
        return None
    if tokens[i].tag in ("IN", "TO", "DT", "PRP", "PRP$", "CC", "MD", "RB"):
        return None
    if "VB" in tagger.readings(tokens[i]):
        return "VB"
    return None


def _rule_particle(tagger, tokens, i):
    """verb _ or verb PRP _ : particles are adverbs unless a complement follows."""
    tok = tokens[i]
    if tok.norm not in PARTICLES or i == 0:
        return None
    nxt = tokens[i + 1] if i + 1 < len(tokens) else None
    prev = tokens[i - 1]
    if prev.is_verb:
        if nxt is not None and (nxt.norm == "of" or nxt.norm in OBJECT_PRONOUNS):
            return "IN"
        return "RB"
    if i >= 2 and prev.norm in OBJECT_PRONOUNS and tokens[i - 2].is_verb:
        if nxt is not None and (nxt.norm == "of" or nxt.tag in ("DT", "PRP$")):
            return "IN"
        return "RB"
    return None


_RULES = (
    _rule_that_her_s,
    _rule_determiner,
    _rule_infinitive,
    _rule_modal,
    _rule_perfect_passive,
    _rule_subject,
    _rule_coordination,
    _rule_object_follows,
    _rule_particle,
)


@lru_cache(maxsize=1)
def default_tagger() -> Tagger:
    return Tagger(default_lexicon())


def tag_sentence(tokens: Sequence[Token], lexicon: TagLexicon | None = None) -> list[Token]:
    tagger = default_tagger() if lexicon is None else Tagger(lexicon)
    return tagger.tag(tokens)


def tag_text(text: str, lexicon: TagLexicon | None = None) -> list[Token]:
    return tag_sentence(tokenize(text), lexicon)


def load_minicorpus(path) -> list[list[tuple[str, str]]]:
    """Read ``word_TAG word_TAG ...`` lines (``#`` comments allowed)."""
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            pairs = []
            for item in line.split():
                word, sep, tag = item.rpartition("_")
                if not sep or not word or tag not in TAGS:
                    raise LexiconFormatError(f"bad token {item!r}", lineno)
                pairs.append((word, tag))
            sentences.append(pairs)
    return sentences


def corpus_accuracy(corpus, tagger: Tagger | None = None) -> float:
    """Token-level accuracy of ``tagger`` against gold ``(word, tag)`` sentences."""
    tagger = tagger or default_tagger()
    right = total = 0
    for sent in corpus:
        tokens, pos = [], 0
        for word, _ in sent:
            tokens.append(Token(word, pos))
            pos += len(word) + 1
        for tok, (_, gold) in zip(tagger.tag(tokens), sent):
            right += tok.tag == gold
            total += 1
    return right / total if total else 1.0
