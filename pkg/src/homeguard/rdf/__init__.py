"""Self-contained RDF toolkit: triple store, Turtle subset, SPARQL subset."""

from .graph import Graph, match, materialize_types
from .sparql import Query, evaluate, parse_sparql, select_values
from .terms import DOUBLE, PLAIN, RDF_TYPE, RDFS_SUBCLASS, Iri, Literal, Triple, Variable
from .turtle import load_turtle, parse_turtle, serialize_turtle

__all__ = [
    "DOUBLE",
    "PLAIN",
    "RDF_TYPE",
    "RDFS_SUBCLASS",
    "Graph",
    "Iri",
    "Literal",
    "Query",
    "Triple",
    "Variable",
    "evaluate",
    "load_turtle",
    "match",
    "materialize_types",
    "parse_sparql",
    "parse_turtle",
    "select_values",
    "serialize_turtle",
]
