from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
RDFS_SUBCLASS = "http://www.w3.org/2000/01/rdf-schema#subClassOf"

PLAIN = "PlainString"
DOUBLE = "Double"


@dataclass(frozen=True, order=True)
class Iri:
    value: str

    def n3(self) -> str:
        return f"<{self.value}>"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Literal:
    lexical: str
    datatype: str = PLAIN

    def __post_init__(self):
        if self.datatype not in (PLAIN, DOUBLE):
            raise ValueError(f"unsupported datatype {self.datatype!r}")
        if self.datatype == DOUBLE:
            try:
                value = float(self.lexical)
            except ValueError:
                raise ValueError(f"not a number: {self.lexical!r}") from None
            if not math.isfinite(value):
                raise ValueError(f"non-finite double: {self.lexical!r}")

    @classmethod
    def double(cls, value) -> "Literal":
        return cls(repr(float(value)) if not isinstance(value, str) else value, DOUBLE)

    def to_python(self):
        return float(self.lexical) if self.datatype == DOUBLE else self.lexical

    def n3(self) -> str:
        if self.datatype == DOUBLE:
            return self.lexical
        return '"' + escape_string(self.lexical) + '"'

    def __str__(self) -> str:
        return self.lexical


@dataclass(frozen=True, order=True)
class Variable:
    name: str

    def n3(self) -> str:
        return f"?{self.name}"


Term = Union[Iri, Literal]
PatternTerm = Union[Iri, Literal, Variable]

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def escape_string(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def term_key(term: Term) -> str:
    """Sort key used for deterministic ordering of terms and result rows."""
    return term.n3()


@dataclass(frozen=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __post_init__(self):
        if not isinstance(self.subject, Iri) or not isinstance(self.predicate, Iri):
            raise TypeError("subject and predicate must be IRIs")
        if not isinstance(self.object, (Iri, Literal)):
            raise TypeError("object must be an IRI or a literal")

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))

    def sort_key(self):
        return (term_key(self.subject), term_key(self.predicate), term_key(self.object))
