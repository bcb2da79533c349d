from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from eboca.rdf.graph import Graph
from eboca.schema.vocab import RDF_TYPE, TURTLE_PREFIXES


@dataclass
class GraphStats:
    triples: int
    subjects: int
    predicates: int
    objects: int
    classes: dict[str, int] = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [
            f"triples\t{self.triples}",
            f"subjects\t{self.subjects}",
            f"predicates\t{self.predicates}",
            f"objects\t{self.objects}",
        ]
        lines += [f"class\t{cls}\t{n}" for cls, n in sorted(self.classes.items())]
        return "\n".join(lines) + "\n"


def _curie(value: str) -> str:
    best = None
    for prefix, ns in TURTLE_PREFIXES.items():
        if value.startswith(ns) and (best is None or len(ns) > len(best[1])):
            best = (prefix, ns)
    return f"{best[0]}:{value[len(best[1]):]}" if best else value


def graph_stats(g: Graph) -> GraphStats:
    per_class = Counter(t.object for t in g.match(None, RDF_TYPE, None))
    return GraphStats(
        triples=len(g),
        subjects=sum(1 for _ in g.subject_terms()),
        predicates=sum(1 for _ in g.predicate_terms()),
        objects=sum(1 for _ in g.object_terms()),
        classes={_curie(getattr(c, "value", c.n3())): n for c, n in per_class.items()},
    )
