"""Parser and serializer for the Turtle subset used by the ontology files.

Supported: ``@prefix`` (and SPARQL-style ``PREFIX``) declarations, ``<iri>``
references, prefixed names, the ``a`` keyword, ``;`` predicate lists, ``,``
object lists, double-quoted strings and bare numbers (stored as doubles).
Blank nodes, collections, language tags and datatype annotations are
rejected with a positioned :class:`TurtleSyntaxError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import TurtleSyntaxError, UnknownPrefixError
from .graph import Graph
from .terms import DOUBLE, RDF_TYPE, Iri, Literal, Triple, escape_string

_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"#[^\n]*"),
    ("IRIREF", r"<[^<>\"{}|^`\\\x00-\x20]*>"),
    ("STRING", r'"(?:[^"\\\n\r]|\\.)*"'),
    ("NUMBER", r"[+-]?(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][+-]?\d+)?(?![\w:])"),
    ("DIRECTIVE", r"@prefix\b"),
    ("SPARQL_PREFIX", r"PREFIX\b"),
    ("PNAME", r"(?:[A-Za-z][\w-]*)?:(?:[\w-](?:[\w.-]*[\w-])?)?"),
    ("A", r"a(?=[\s<\"])"),
    ("PUNCT", r"[.;,]"),
    ("BNODE", r"\[|_:"),
    ("COLLECTION", r"\("),
    ("LANGTAG", r"@[A-Za-z]+|\^\^"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{rx})" for name, rx in _TOKEN_SPEC))
_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r", "t": "\t", "'": "'"}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise TurtleSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "BNODE":
            raise TurtleSyntaxError("blank nodes are not supported", line, col)
        if kind == "COLLECTION":
            raise TurtleSyntaxError("collections are not supported", line, col)
        if kind == "LANGTAG":
            raise TurtleSyntaxError("language tags and datatypes are not supported", line, col)
        if kind not in ("WS", "COMMENT"):
            toks.append(_Tok(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    return toks


def _unescape(body: str, tok: _Tok) -> str:
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        nxt = body[i + 1]
        if nxt in _UNESCAPES:
            out.append(_UNESCAPES[nxt])
            i += 2
        elif nxt in "uU":
            width = 4 if nxt == "u" else 8
            digits = body[i + 2 : i + 2 + width]
            if len(digits) != width or not all(c in "0123456789abcdefABCDEF" for c in digits):
                raise TurtleSyntaxError("bad unicode escape", tok.line, tok.col + i + 1)
            out.append(chr(int(digits, 16)))
            i += 2 + width
        else:
            raise TurtleSyntaxError(f"unknown escape \\{nxt}", tok.line, tok.col + i + 1)
    return "".join(out)


class _Parser:
    def __init__(self, text: str, graph: Graph):
        self.toks = _tokenize(text)
        self.i = 0
        self.graph = graph
        end_line = text.count("\n") + 1
        self._eof = _Tok("EOF", "", end_line, len(text) - (text.rfind("\n") + 1) + 1)

    def peek(self) -> _Tok:
        return self.toks[self.i] if self.i < len(self.toks) else self._eof

    def next(self) -> _Tok:
        tok = self.peek()
        self.i += 1
        return tok

    def expect_punct(self, ch: str) -> None:
        tok = self.next()
        if tok.kind != "PUNCT" or tok.text != ch:
            raise TurtleSyntaxError(f"expected {ch!r}, found {tok.text or 'end of input'!r}", tok.line, tok.col)

    def parse(self) -> None:
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind in ("DIRECTIVE", "SPARQL_PREFIX"):
                self.prefix_decl()
            else:
                self.statement()

    def prefix_decl(self) -> None:
        head = self.next()
        name = self.next()
        if name.kind != "PNAME" or not name.text.endswith(":"):
            raise TurtleSyntaxError("expected prefix name ending in ':'", name.line, name.col)
        iri = self.next()
        if iri.kind != "IRIREF":
            raise TurtleSyntaxError("expected <iri> in prefix declaration", iri.line, iri.col)
        self.graph.bind(name.text[:-1], iri.text[1:-1])
        if head.kind == "DIRECTIVE":
            self.expect_punct(".")

    def iri(self, tok: _Tok) -> Iri:
        if tok.kind == "IRIREF":
            return Iri(tok.text[1:-1])
        if tok.kind == "PNAME":
            prefix, _, local = tok.text.partition(":")
            if prefix not in self.graph.prefixes:
                raise UnknownPrefixError(prefix, (tok.line, tok.col))
            return Iri(self.graph.prefixes[prefix] + local)
        raise TurtleSyntaxError(f"expected IRI, found {tok.text or 'end of input'!r}", tok.line, tok.col)

    def statement(self) -> None:
        subject = self.iri(self.next())
        while True:
            tok = self.next()
            predicate = Iri(RDF_TYPE) if tok.kind == "A" else self.iri(tok)
            while True:
                self.graph.add(Triple(subject, predicate, self.obj()))
                if self.peek().kind == "PUNCT" and self.peek().text == ",":
                    self.next()
                    continue
                break
            nxt = self.peek()
            if nxt.kind == "PUNCT" and nxt.text == ";":
                while self.peek().kind == "PUNCT" and self.peek().text == ";":
                    self.next()
                if self.peek().kind == "PUNCT" and self.peek().text == ".":
                    break
                continue
            break
        self.expect_punct(".")

    def obj(self):
        tok = self.next()
        if tok.kind == "STRING":
            return Literal(_unescape(tok.text[1:-1], tok))
        if tok.kind == "NUMBER":
            return Literal(tok.text, DOUBLE)
        return self.iri(tok)


def parse_turtle(text: str, graph: Graph | None = None) -> Graph:
    """Parse Turtle-subset ``text`` into ``graph`` (a new graph by default)."""
    graph = Graph() if graph is None else graph
    _Parser(text, graph).parse()
    return graph


def load_turtle(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_turtle(fh.read())


_LOCAL_RE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_-]*)\Z")


def _compact(iri: Iri, prefixes: list[tuple[str, str]]) -> str:
    for prefix, ns in prefixes:
        if iri.value.startswith(ns):
            local = iri.value[len(ns) :]
            if local == "" or _LOCAL_RE.match(local):
                return f"{prefix}:{local}"
    return iri.n3()


def _term(term, prefixes) -> str:
    if isinstance(term, Iri):
        return _compact(term, prefixes)
    if term.datatype == DOUBLE:
        return term.lexical
    return '"' + escape_string(term.lexical) + '"'


def serialize_turtle(graph: Graph) -> str:
    """Deterministic Turtle text: prefixes sorted, triples grouped by subject."""
    # longest namespace first so the most specific prefix wins
    prefixes = sorted(graph.prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(graph.prefixes.items())]
    triples = graph.sorted_triples()
    if lines and triples:
        lines.append("")
    i = 0
    while i < len(triples):
        subject = triples[i].subject
        group = []
        while i < len(triples) and triples[i].subject == subject:
            group.append(triples[i])
            i += 1
        parts = []
        j = 0
        while j < len(group):
            pred = group[j].predicate
            objs = []
            while j < len(group) and group[j].predicate == pred:
                objs.append(_term(group[j].object, prefixes))
                j += 1
            pred_text = "a" if pred.value == RDF_TYPE else _compact(pred, prefixes)
            parts.append(f"{pred_text} {' , '.join(objs)}")
        lines.append(f"{_compact(subject, prefixes)} " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + "\n"
