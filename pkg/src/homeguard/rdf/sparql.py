"""Basic-graph-pattern SELECT queries.

Grammar (whitespace-insensitive, keywords case-insensitive)::

    query   := prefix* 'SELECT' 'DISTINCT'? var+ 'WHERE'? '{' pattern ('.' pattern)* '.'? '}'
    prefix  := 'PREFIX' pname_ns '<' iri '>'
    pattern := term term term
    term    := var | '<' iri '>' | pname | 'a' | string | number

Results always use set semantics and come back sorted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import MalformedQueryError, UnknownPrefixError
from .graph import Graph, unify
from .terms import DOUBLE, RDF_TYPE, Iri, Literal, Term, Variable

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+|\#[^\n]*)
  | (?P<VAR>[?$][A-Za-z_]\w*)
  | (?P<IRIREF><[^<>"{}|^`\\\x00-\x20]*>)
  | (?P<STRING>"(?:[^"\\\n]|\\.)*")
  | (?P<NUMBER>[+-]?(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][+-]?\d+)?(?![\w:]))
  | (?P<PNAME>(?:[A-Za-z][\w-]*)?:(?:[\w-](?:[\w.-]*[\w-])?)?)
  | (?P<WORD>[A-Za-z]+)
  | (?P<PUNCT>[{}.*])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"PREFIX", "SELECT", "DISTINCT", "WHERE"}
_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r", "t": "\t"}


@dataclass(frozen=True)
class Query:
    variables: tuple[str, ...]
    patterns: tuple[tuple, ...]
    prefixes: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.patterns:
            raise MalformedQueryError("query has no triple patterns")
        used = {t.name for p in self.patterns for t in p if isinstance(t, Variable)}
        missing = [v for v in self.variables if v not in used]
        if missing:
            raise MalformedQueryError(f"projected variable ?{missing[0]} does not occur in any pattern")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise MalformedQueryError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "WS":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("EOF", "", len(text)))
    return out


def _unescape(body: str, pos: int) -> str:
    out, i = [], 0
    while i < len(body):
        if body[i] == "\\":
            esc = body[i + 1]
            if esc not in _UNESCAPES:
                raise MalformedQueryError(f"unknown escape \\{esc}", pos + i)
            out.append(_UNESCAPES[esc])
            i += 2
        else:
            out.append(body[i])
            i += 1
    return "".join(out)


def parse_sparql(text: str, prefixes: dict[str, str] | None = None) -> Query:
    """Parse a SELECT query. ``prefixes`` are pre-declared (e.g. a graph's map)."""
    toks = _tokenize(text)
    decl = dict(prefixes or {})
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = toks[i]
        if kind and tok[0] != kind or value and tok[1].upper() != value:
            want = value or kind
            raise MalformedQueryError(f"expected {want}, found {tok[1] or 'end of query'!r}", tok[2])
        i += 1
        return tok

    while peek()[0] == "WORD" and peek()[1].upper() == "PREFIX":
        take()
        name = take("PNAME")
        if not name[1].endswith(":"):
            raise MalformedQueryError("prefix name must end with ':'", name[2])
        iri = take("IRIREF")
        decl[name[1][:-1]] = iri[1][1:-1]

    take("WORD", "SELECT")
    if peek()[0] == "WORD" and peek()[1].upper() == "DISTINCT":
        take()
    variables = []
    while peek()[0] == "VAR":
        variables.append(take()[1][1:])
    if not variables:
        raise MalformedQueryError("SELECT needs at least one variable", peek()[2])
    if peek()[0] == "WORD" and peek()[1].upper() == "WHERE":
        take()
    take("PUNCT", "{")

    def term():
        kind, value, pos = take()
        if kind == "VAR":
            return Variable(value[1:])
        if kind == "IRIREF":
            return Iri(value[1:-1])
        if kind == "PNAME":
            prefix, _, local = value.partition(":")
            if prefix not in decl:
                raise UnknownPrefixError(prefix, pos)
            return Iri(decl[prefix] + local)
        if kind == "WORD" and value == "a":
            return Iri(RDF_TYPE)
        if kind == "STRING":
            return Literal(_unescape(value[1:-1], pos + 1))
        if kind == "NUMBER":
            return Literal(value, DOUBLE)
        raise MalformedQueryError(f"expected a term, found {value or 'end of query'!r}", pos)

    patterns = []
    while not (peek()[0] == "PUNCT" and peek()[1] == "}"):
        if peek()[0] == "WORD" and peek()[1].upper() in ("FILTER", "OPTIONAL", "UNION", "GRAPH", "BIND", "VALUES"):
            raise MalformedQueryError(f"{peek()[1].upper()} is not supported", peek()[2])
        patterns.append((term(), term(), term()))
        if peek()[0] == "PUNCT" and peek()[1] == ".":
            take()
        elif not (peek()[0] == "PUNCT" and peek()[1] == "}"):
            tok = peek()
            raise MalformedQueryError(f"expected '.' or '}}', found {tok[1] or 'end of query'!r}", tok[2])
    take("PUNCT", "}")
    if peek()[0] != "EOF":
        raise MalformedQueryError(f"trailing input {peek()[1]!r}", peek()[2])
    if not patterns:
        raise MalformedQueryError("WHERE clause has no triple patterns", toks[i - 1][2])
    return Query(tuple(variables), tuple(patterns), decl)


def _substitute(pattern, row):
    return tuple(row.get(t.name, t) if isinstance(t, Variable) else t for t in pattern)


def evaluate(graph: Graph, query: Query | str) -> list[dict[str, Term]]:
    """Join the query's patterns left to right and project the result.

    Rows are distinct, bind exactly the projected variables and are sorted
    by the N-Triples form of their terms in projection order.
    """
    if isinstance(query, str):
        query = parse_sparql(query, graph.prefixes)
    rows: list[dict] = [{}]
    for pattern in query.patterns:
        joined = []
        for row in rows:
            bound = _substitute(pattern, row)
            lookup = [None if isinstance(t, Variable) else t for t in bound]
            for triple in graph.candidates(*lookup):
                ext = unify(bound, triple, row)
                if ext is not None:
                    joined.append(ext)
        rows = joined
        if not rows:
            break
    return project(rows, query.variables)


def project(rows, variables) -> list[dict[str, Term]]:
    seen = set()
    out = []
    for row in rows:
        key = tuple(row[v] for v in variables)
        if key not in seen:
            seen.add(key)
            out.append(dict(zip(variables, key)))
    out.sort(key=lambda r: tuple(r[v].n3() for v in variables))
    return out


def select_values(graph: Graph, query: Query | str, variable: str | None = None) -> list[Term]:
    """Convenience: the bound values of one variable (the first by default)."""
    if isinstance(query, str):
        query = parse_sparql(query, graph.prefixes)
    name = variable or query.variables[0]
    return [row[name] for row in evaluate(graph, query)]
