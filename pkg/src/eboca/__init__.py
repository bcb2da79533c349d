"""Build, validate and query evidence-based biomedical association knowledge graphs.

Subpackages: :mod:`eboca.rdf` (terms, graph, N-Triples, Turtle),
:mod:`eboca.schema` (vocabulary and emitters), :mod:`eboca.mapping`,
:mod:`eboca.evidence`, :mod:`eboca.validate` and :mod:`eboca.query`.
"""

__version__ = "0.1.0"
