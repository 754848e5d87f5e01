"""Verb lemmatization and synonym canonicalization."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import LexiconFormatError

_VOWELS = "aeiou"
_CVC = re.compile(r"(?:^|[^aeiou])[aeiou][^aeiouwxy]$")


def parse_pairs(lines: Iterable[str]) -> dict[str, str]:
    """Parse ``surface<TAB>target`` lines; ``#`` starts a comment line."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise LexiconFormatError("expected surface<TAB>target", lineno)
        out[parts[0].strip().lower()] = parts[1].strip().lower()
    return out


def _read_data(name):
    with resources.files("homeguard").joinpath("data", name).open(encoding="utf-8") as fh:
        return parse_pairs(fh)


@dataclass(frozen=True)
class LemmaRules:
    """Irregular forms first, then ordered suffix rules.

    ``known`` is the set of verb base forms; suffix candidates that hit it
    win over the fallback heuristics.
    """

    exceptions: Mapping[str, str]
    known: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "exceptions", MappingProxyType(dict(self.exceptions)))
        # a lemma must lemmatize to itself: a target that is also a key
        # ("laid" -> "lay" -> "lie") is only safe when it is a known base
        chained = sorted(v for v in set(self.exceptions.values()) if v in self.exceptions and v not in self.known)
        if chained:
            raise ValueError(f"chained lemma exceptions: {chained[:3]}")

    def lemmatize(self, word: str, tag: str = "VB") -> str:
        w = word.lower().replace("’", "'")
        if w in self.known and not (tag in ("VBD", "VBN") and w in self.exceptions):
            return w
        if w in self.exceptions:
            return self.exceptions[w]
        return self._suffix(w)

    def _pick(self, *candidates):
        for c in candidates:
            if c and c in self.known:
                return c
        return None

    def _suffix(self, w: str) -> str:
        # 1. -ies / -ied -> -y
        if len(w) > 4 and w.endswith(("ies", "ied")):
            return self._pick(w[:-1], w[:-2]) or w[:-3] + "y"
        # 2. -ing and -ed with doubling undone or silent e restored
        for suffix in ("ing", "ed"):
            if w.endswith(suffix) and len(w) - len(suffix) >= 2:
                stem = w[: -len(suffix)]
                if not any(c in _VOWELS + "y" for c in stem):
                    break
                undoubled = stem[:-1] if len(stem) > 2 and stem[-1] == stem[-2] else None
                hit = self._pick(stem, stem + "e", undoubled)
                if hit:
                    return hit
                if undoubled and stem[-1] not in "lsz":
                    return undoubled
                if re.search(r"[aeiou]s$", stem) or stem.endswith(("v", "c", "u")) or (stem.endswith("g") and not stem.endswith("ng")):
                    return stem + "e"
                if _CVC.search(stem) and len(re.findall(r"[aeiouy]+", stem)) == 1 and not stem.endswith("r"):
                    return stem + "e"
                return stem
        # 3. -es / -s
        if len(w) > 3 and w.endswith("es") and re.search(r"(ch|sh|ss|x|z|o)es$", w):
            return self._pick(w[:-1]) or w[:-2]
        if len(w) > 2 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
            return w[:-1]
        return w


@dataclass(frozen=True)
class SynsetTable:
    """Synonym -> canonical lemma. Canonicals are fixed points."""

    mapping: Mapping[str, str]

    def __post_init__(self):
        table = {k.lower(): v.lower() for k, v in self.mapping.items()}
        for canonical in set(table.values()):
            if table.get(canonical, canonical) != canonical:
                raise ValueError(f"canonical {canonical!r} is itself mapped to {table[canonical]!r}")
            table[canonical] = canonical
        object.__setattr__(self, "mapping", MappingProxyType(table))

    @property
    def canonicals(self) -> frozenset[str]:
        return frozenset(self.mapping.values())

    @property
    def phrasal(self) -> frozenset[str]:
        """Multi-word surfaces, e.g. ``run over``."""
        return frozenset(k for k in self.mapping if " " in k)

    def synonyms_of(self, canonical: str) -> list[str]:
        return sorted(k for k, v in self.mapping.items() if v == canonical and k != canonical)

    def canonicalize(self, lemma: str) -> str:
        return self.mapping.get(lemma.lower(), lemma.lower())


def load_synsets(path) -> SynsetTable:
    with open(path, encoding="utf-8") as fh:
        return SynsetTable(parse_pairs(fh))


def load_lemma_rules(path, known: Iterable[str] = ()) -> LemmaRules:
    with open(path, encoding="utf-8") as fh:
        return LemmaRules(parse_pairs(fh), frozenset(known))


@lru_cache(maxsize=1)
def default_synsets() -> SynsetTable:
    return SynsetTable(_read_data("synsets.tsv"))


@lru_cache(maxsize=1)
def default_lemma_rules() -> LemmaRules:
    from .tagger import default_lexicon

    return LemmaRules(_read_data("lemma_exceptions.tsv"), default_lexicon().verb_bases)


def lemmatize(word: str, tag: str = "VB", rules: LemmaRules | None = None) -> str:
    return (rules or default_lemma_rules()).lemmatize(word, tag)


def canonicalize(lemma: str, table: SynsetTable | None = None) -> str:
    return (table or default_synsets()).canonicalize(lemma)
