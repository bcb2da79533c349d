from eboca.rdf.graph import FrozenGraphError, Graph
from eboca.rdf.ntriples import NTriplesError, iter_ntriples, parse_ntriples, serialize_ntriples
from eboca.rdf.terms import BlankNode, Iri, Literal, Term, TermError, Triple, triple
from eboca.rdf.turtle import TurtleError, parse_turtle, serialize_turtle

__all__ = [
    "BlankNode",
    "FrozenGraphError",
    "Graph",
    "Iri",
    "Literal",
    "NTriplesError",
    "Term",
    "TermError",
    "Triple",
    "TurtleError",
    "iter_ntriples",
    "parse_ntriples",
    "parse_turtle",
    "serialize_ntriples",
    "serialize_turtle",
    "triple",
]
