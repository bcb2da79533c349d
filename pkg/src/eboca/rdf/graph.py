from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Optional

from eboca.rdf.terms import Iri, Term, Triple, triple


class FrozenGraphError(RuntimeError):
    pass


class Graph:
    """In-memory set of triples with subject, predicate and object indexes.

    Construction is single-writer.  After :meth:`freeze` the graph rejects
    writes and can be shared between threads for read-only matching.
    """

    __slots__ = ("_triples", "_by_s", "_by_p", "_by_o", "_frozen")

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: set[Triple] = set()
        self._by_s: dict[Term, set[Triple]] = defaultdict(set)
        self._by_p: dict[Term, set[Triple]] = defaultdict(set)
        self._by_o: dict[Term, set[Triple]] = defaultdict(set)
        self._frozen = False
        self.update(triples)

    def add(self, t: Triple) -> bool:
        """Insert ``t``; returns True if it was not already present."""
        if self._frozen:
            raise FrozenGraphError("graph is frozen")
        if type(t) is not Triple:
            t = triple(*t)
        if t in self._triples:
            return False
        self._triples.add(t)
        self._by_s[t[0]].add(t)
        self._by_p[t[1]].add(t)
        self._by_o[t[2]].add(t)
        return True

    def update(self, triples: Iterable[Triple]) -> int:
        added = 0
        for t in triples:
            added += self.add(t)
        return added

    def freeze(self) -> "Graph":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def match(
        self,
        s: Optional[Term] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> set[Triple]:
        """All triples matching the bound positions; None is a wildcard."""
        if s is None and p is None and o is None:
            return set(self._triples)
        candidates = None
        for term, index in ((s, self._by_s), (p, self._by_p), (o, self._by_o)):
            if term is None:
                continue
            bucket = index.get(term)
            if not bucket:
                return set()
            if candidates is None or len(bucket) < len(candidates):
                candidates = bucket
        return {
            t
            for t in candidates
            if (s is None or t[0] == s) and (p is None or t[1] == p) and (o is None or t[2] == o)
        }

    def count(self, s: Optional[Term] = None, p: Optional[Iri] = None, o: Optional[Term] = None) -> int:
        """Cheap upper bound on len(match(s, p, o)), used for join ordering."""
        best = len(self._triples)
        for term, index in ((s, self._by_s), (p, self._by_p), (o, self._by_o)):
            if term is not None:
                bucket = index.get(term)
                best = min(best, len(bucket) if bucket else 0)
        return best

    def objects(self, s: Term, p: Iri) -> list[Term]:
        return sorted(t[2] for t in self.match(s, p, None))

    def subjects(self, p: Iri, o: Term) -> list[Term]:
        return sorted(t[0] for t in self.match(None, p, o))

    def subject_terms(self) -> Iterator[Term]:
        return (k for k, v in self._by_s.items() if v)

    def predicate_terms(self) -> Iterator[Term]:
        return (k for k, v in self._by_p.items() if v)

    def object_terms(self) -> Iterator[Term]:
        return (k for k, v in self._by_o.items() if v)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, t: object) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __or__(self, other: "Graph") -> "Graph":
        g = Graph(self)
        g.update(other)
        return g

    def __repr__(self) -> str:
        return f"<Graph of {len(self)} triples>"
