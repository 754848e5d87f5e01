"""In-memory triple store with subject, predicate and object indexes."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator

from ..errors import UnknownPrefixError
from .terms import RDF_TYPE, RDFS_SUBCLASS, Iri, Literal, Term, Triple, Variable


class Graph:
    """A set of triples plus a prefix map.

    The graph is mutable until :meth:`freeze` is called. After that every
    mutating method raises, so a frozen graph can be shared between threads.
    """

    def __init__(self, triples: Iterable[Triple] = (), prefixes: dict[str, str] | None = None):
        self._triples: set[Triple] = set()
        self._by_s: dict[Term, set[Triple]] = defaultdict(set)
        self._by_p: dict[Term, set[Triple]] = defaultdict(set)
        self._by_o: dict[Term, set[Triple]] = defaultdict(set)
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self._frozen = False
        for t in triples:
            self.add(t)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> "Graph":
        self._frozen = True
        return self

    def _check_mutable(self):
        if self._frozen:
            raise RuntimeError("graph is frozen")

    def bind(self, prefix: str, namespace: str) -> None:
        self._check_mutable()
        self.prefixes[prefix] = namespace

    def add(self, triple: Triple) -> bool:
        """Insert a triple. Returns False when it was already present."""
        self._check_mutable()
        if triple in self._triples:
            return False
        self._triples.add(triple)
        self._by_s[triple.subject].add(triple)
        self._by_p[triple.predicate].add(triple)
        self._by_o[triple.object].add(triple)
        return True

    def remove(self, triple: Triple) -> None:
        self._check_mutable()
        if triple not in self._triples:
            return
        self._triples.discard(triple)
        for index, key in ((self._by_s, triple.subject), (self._by_p, triple.predicate), (self._by_o, triple.object)):
            bucket = index[key]
            bucket.discard(triple)
            if not bucket:
                del index[key]

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple) -> bool:
        return triple in self._triples

    def triples(self) -> frozenset[Triple]:
        return frozenset(self._triples)

    def sorted_triples(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.sort_key)

    def candidates(self, s=None, p=None, o=None) -> Iterable[Triple]:
        """Triples that may match the given bound positions (``None`` = free).

        Uses the smallest applicable index bucket; callers still filter.
        """
        buckets = []
        if s is not None:
            buckets.append(self._by_s.get(s, ()))
        if p is not None:
            buckets.append(self._by_p.get(p, ()))
        if o is not None:
            buckets.append(self._by_o.get(o, ()))
        if not buckets:
            return self._triples
        return min(buckets, key=len)

    def find(self, s=None, p=None, o=None) -> list[Triple]:
        return [
            t
            for t in self.candidates(s, p, o)
            if (s is None or t.subject == s) and (p is None or t.predicate == p) and (o is None or t.object == o)
        ]

    def objects(self, s, p) -> list[Term]:
        return [t.object for t in self.find(s, p, None)]

    def subjects(self, p, o) -> list[Iri]:
        return [t.subject for t in self.find(None, p, o)]

    def value(self, s, p):
        """The single object of (s, p), or None. Raises if there are several."""
        objs = self.objects(s, p)
        if len(objs) > 1:
            raise ValueError(f"{s} has {len(objs)} values for {p}")
        return objs[0] if objs else None

    def expand(self, name: str) -> Iri:
        prefix, _, local = name.partition(":")
        if prefix not in self.prefixes:
            raise UnknownPrefixError(prefix)
        return Iri(self.prefixes[prefix] + local)

    def copy(self) -> "Graph":
        return Graph(self._triples, self.prefixes)


def match(graph: Graph, pattern) -> list[dict[str, Term]]:
    """All bindings of the variables in a triple pattern against ``graph``.

    A variable repeated inside the pattern must bind the same term in every
    position. Rows are returned in a deterministic order.
    """
    bound = [None if isinstance(t, Variable) else t for t in pattern]
    rows = []
    seen = set()
    for triple in graph.candidates(*bound):
        row = unify(pattern, triple)
        if row is None:
            continue
        key = tuple(sorted(row.items()))
        if key not in seen:
            seen.add(key)
            rows.append(row)
    rows.sort(key=lambda r: sorted((k, v.n3()) for k, v in r.items()))
    return rows


def unify(pattern, triple: Triple, row: dict | None = None) -> dict | None:
    out = dict(row) if row else {}
    for pat, term in zip(pattern, triple):
        if isinstance(pat, Variable):
            prev = out.get(pat.name)
            if prev is None:
                out[pat.name] = term
            elif prev != term:
                return None
        elif pat != term:
            return None
    return out


def materialize_types(graph: Graph) -> int:
    """Add ``x a D`` for every ``x a C`` with ``C rdfs:subClassOf D``.

    One level only: the closure is not iterated. Returns the number of
    triples added.
    """
    rdf_type = Iri(RDF_TYPE)
    sub = Iri(RDFS_SUBCLASS)
    added = 0
    for t in list(graph.find(None, rdf_type, None)):
        for parent in graph.objects(t.object, sub):
            if isinstance(parent, Iri) and graph.add(Triple(t.subject, rdf_type, parent)):
                added += 1
    return added


__all__ = ["Graph", "Iri", "Literal", "Triple", "Variable", "match", "unify", "materialize_types"]
