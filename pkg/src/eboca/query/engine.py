"""Conjunctive graph-pattern queries with single-variable filters.

Text format, one clause per line::

    PREFIX ex: <http://example.org/>
    SELECT ?drug ?name
    ?a a sio:SIO_001006 .
    ?a sio:SIO_000628 ?drug .
    ?drug rdfs:label ?name .
    FILTER ?name regex "^Hydroxy" i

The prefixes of the schema catalog (plus ``res:`` for instance IRIs) are
predeclared.  ``SELECT *`` selects every variable in order of appearance.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

from eboca.rdf.graph import Graph
from eboca.rdf.ntriples import _unescape
from eboca.rdf.terms import XSD, Iri, Literal, Term, TermError
from eboca.schema.vocab import NAMESPACES, RESOURCE_BASE

_VARNAME = re.compile(r"^[a-zA-Z0-9_]+$")
_TOKEN = re.compile(r'<[^>]*>|"(?:[^"\\]|\\.)*"(?:@[A-Za-z0-9\-]+|\^\^\S+)?|[^\s]+')
_NUMBER = re.compile(r"^[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?$")
NUMERIC_TYPES = {
    XSD + t
    for t in (
        "double", "float", "decimal", "integer", "int", "long", "short", "byte",
        "nonNegativeInteger", "positiveInteger", "negativeInteger", "nonPositiveInteger",
        "unsignedInt", "unsignedLong", "unsignedShort", "unsignedByte",
    )
}
OPS = ("=", "!=", "<", ">", "regex")

DEFAULT_PREFIXES = dict(NAMESPACES, res=RESOURCE_BASE)


class QueryError(ValueError):
    pass


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not _VARNAME.match(self.name):
            raise QueryError(f"invalid variable name {self.name!r}")

    def __str__(self) -> str:
        return "?" + self.name


Slot = Union[Term, Var]


@dataclass(frozen=True)
class TriplePattern:
    s: Slot
    p: Slot
    o: Slot

    def variables(self) -> list[str]:
        return [x.name for x in (self.s, self.p, self.o) if isinstance(x, Var)]


@dataclass(frozen=True)
class Filter:
    var: str
    op: str
    value: Union[Term, float, str]
    flags: str = ""

    def __post_init__(self):
        if self.op not in OPS:
            raise QueryError(f"unknown filter operator {self.op!r}")


@dataclass
class Query:
    select: list[str]
    patterns: list[TriplePattern]
    filters: list[Filter] = field(default_factory=list)

    def __post_init__(self):
        seen = self.variables()
        for v in self.select:
            if v not in seen:
                raise QueryError(f"selected variable ?{v} appears in no pattern")
        for f in self.filters:
            if f.var not in seen:
                raise QueryError(f"filtered variable ?{f.var} appears in no pattern")
        if not self.patterns:
            raise QueryError("query has no patterns")

    def variables(self) -> list[str]:
        out: dict[str, None] = {}
        for tp in self.patterns:
            for v in tp.variables():
                out[v] = None
        return list(out)


@dataclass
class BindingSet:
    variables: list[str]
    rows: list[dict[str, Term]]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def keys(self) -> list[tuple[str, ...]]:
        return [tuple(r[v].n3() for v in self.variables) for r in self.rows]

    def to_tsv(self) -> str:
        lines = ["\t".join("?" + v for v in self.variables)]
        lines += ["\t".join(k) for k in self.keys()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = [dict(zip(self.variables, k)) for k in self.keys()]
        return json.dumps({"variables": self.variables, "rows": rows}, indent=2, ensure_ascii=False) + "\n"


# --- parsing -------------------------------------------------------------

def _parse_slot(tok: str, prefixes: Mapping[str, str]) -> Slot:
    if tok.startswith("?"):
        return Var(tok[1:])
    return _parse_term(tok, prefixes)


def _parse_term(tok: str, prefixes: Mapping[str, str]) -> Term:
    try:
        if tok == "a":
            return Iri(NAMESPACES["rdf"] + "type")
        if tok.startswith("<") and tok.endswith(">"):
            return Iri(tok[1:-1])
        if tok.startswith('"'):
            m = re.match(r'^"((?:[^"\\]|\\.)*)"(?:@([A-Za-z0-9\-]+)|\^\^(\S+))?$', tok)
            if not m:
                raise QueryError(f"malformed literal {tok}")
            lexical = _unescape(m.group(1))
            if m.group(2):
                return Literal(lexical, language=m.group(2))
            if m.group(3):
                return Literal(lexical, _parse_term(m.group(3), prefixes))
            return Literal(lexical)
        if _NUMBER.match(tok):
            if "e" in tok.lower():
                return Literal(tok, XSD + "double")
            return Literal(tok, XSD + ("decimal" if "." in tok else "integer"))
        if ":" in tok:
            prefix, local = tok.split(":", 1)
            if prefix not in prefixes:
                raise QueryError(f"unknown prefix {prefix!r}")
            return Iri(prefixes[prefix] + local)
    except TermError as exc:
        raise QueryError(str(exc)) from None
    raise QueryError(f"cannot parse term {tok!r}")


def parse_query(text: str, prefixes: Mapping[str, str] | None = None) -> Query:
    pfx = dict(DEFAULT_PREFIXES)
    pfx.update(prefixes or {})
    select: list[str] | None = None
    patterns: list[TriplePattern] = []
    filters: list[Filter] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _TOKEN.findall(line)
        if not toks or toks[0].startswith("#"):
            continue
        head = toks[0].upper()
        try:
            if head == "PREFIX":
                if len(toks) != 3 or not toks[1].endswith(":"):
                    raise QueryError("expected: PREFIX name: <namespace>")
                pfx[toks[1][:-1]] = toks[2].strip("<>")
            elif head == "SELECT":
                if select is not None:
                    raise QueryError("more than one SELECT")
                if toks[1:] == ["*"]:
                    select = []
                else:
                    if not toks[1:] or not all(t.startswith("?") for t in toks[1:]):
                        raise QueryError("expected: SELECT ?var ... or SELECT *")
                    select = [Var(t[1:]).name for t in toks[1:]]
            elif head == "FILTER":
                filters.append(_parse_filter(toks[1:], pfx))
            else:
                if toks[-1] == ".":
                    toks = toks[:-1]
                elif toks[-1].endswith(".") and not toks[-1].startswith(('"', "<")):
                    toks[-1] = toks[-1][:-1]
                if len(toks) != 3:
                    raise QueryError("a pattern needs exactly subject, predicate and object")
                patterns.append(TriplePattern(*(_parse_slot(t, pfx) for t in toks)))
        except QueryError as exc:
            raise QueryError(f"line {lineno}: {exc}") from None
    if select is None:
        raise QueryError("query has no SELECT line")
    if not select:
        seen: dict[str, None] = {}
        for tp in patterns:
            for v in tp.variables():
                seen[v] = None
        select = list(seen)
    return Query(select, patterns, filters)


def _parse_filter(toks: list[str], pfx: Mapping[str, str]) -> Filter:
    if len(toks) not in (3, 4) or not toks[0].startswith("?"):
        raise QueryError("expected: FILTER ?var op constant")
    var, op, raw = toks[0][1:], toks[1], toks[2]
    op = {"≠": "!=", "<>": "!="}.get(op, op)
    op = "regex" if op.lower() == "regex" else op
    if op == "regex":
        if not raw.startswith('"'):
            raise QueryError("regex pattern must be a quoted string")
        pattern = _parse_term(raw, pfx)
        flags = toks[3].strip('"') if len(toks) == 4 else ""
        if set(flags) - set("imsx"):
            raise QueryError(f"unsupported regex flags {flags!r}")
        try:
            re.compile(pattern.lexical)
        except re.error as exc:
            raise QueryError(f"bad regex: {exc}") from None
        return Filter(Var(var).name, op, pattern.lexical, flags)
    if len(toks) != 3:
        raise QueryError("expected: FILTER ?var op constant")
    if _NUMBER.match(raw):
        return Filter(Var(var).name, op, float(raw))
    return Filter(Var(var).name, op, _parse_term(raw, pfx))


# --- evaluation ----------------------------------------------------------

def numeric_value(t: Term) -> float | None:
    if isinstance(t, Literal) and t.datatype.value in NUMERIC_TYPES:
        try:
            v = float(t.lexical)
        except ValueError:
            return None
        return None if math.isnan(v) else v
    return None


def filter_holds(f: Filter, t: Term) -> bool:
    """True if the filter accepts ``t``; incomparable values are rejected."""
    if f.op == "regex":
        if not isinstance(t, Literal):
            return False
        flags = 0
        for c in f.flags:
            flags |= {"i": re.I, "m": re.M, "s": re.S, "x": re.X}[c]
        return re.search(f.value, t.lexical, flags) is not None

    c = f.value
    a = numeric_value(t)
    b = c if isinstance(c, float) else numeric_value(c)
    if a is not None and b is not None:
        return {"=": a == b, "!=": a != b, "<": a < b, ">": a > b}[f.op]
    if isinstance(c, float):
        return False
    if f.op == "=":
        return t == c
    if f.op == "!=":
        return t != c
    if (
        isinstance(t, Literal)
        and isinstance(c, Literal)
        and a is None
        and b is None
        and t.datatype == c.datatype
        and t.language == c.language
    ):
        return t.lexical < c.lexical if f.op == "<" else t.lexical > c.lexical
    return False


def _resolve(slot: Slot, binding: dict[str, Term]) -> Term | None:
    if isinstance(slot, Var):
        return binding.get(slot.name)
    return slot


def _extend(tp: TriplePattern, t, binding: dict[str, Term]) -> dict[str, Term] | None:
    new = binding
    for slot, value in zip((tp.s, tp.p, tp.o), t):
        if isinstance(slot, Var):
            bound = new.get(slot.name)
            if bound is None:
                if new is binding:
                    new = dict(binding)
                new[slot.name] = value
            elif bound != value:
                return None
    return new


def solve(g: Graph, q: Query) -> BindingSet:
    """Every assignment under which all patterns match and all filters hold."""
    filters_by_var: dict[str, list[Filter]] = {}
    for f in q.filters:
        filters_by_var.setdefault(f.var, []).append(f)

    def ok(binding: dict[str, Term], fresh: set[str]) -> bool:
        return all(filter_holds(f, binding[v]) for v in fresh for f in filters_by_var.get(v, ()))

    def search(remaining: list[TriplePattern], binding: dict[str, Term]) -> Iterator[dict[str, Term]]:
        if not remaining:
            yield binding
            return
        # pick the pattern with the fewest candidate triples under this binding
        best, best_n = 0, None
        for i, tp in enumerate(remaining):
            n = g.count(_resolve(tp.s, binding), _resolve(tp.p, binding), _resolve(tp.o, binding))
            if best_n is None or n < best_n:
                best, best_n = i, n
                if n == 0:
                    return
        tp = remaining[best]
        rest = remaining[:best] + remaining[best + 1:]
        s, p, o = _resolve(tp.s, binding), _resolve(tp.p, binding), _resolve(tp.o, binding)
        if p is not None and not isinstance(p, Iri):
            return
        for t in g.match(s, p, o):
            new = _extend(tp, t, binding)
            if new is None:
                continue
            fresh = set(new) - set(binding)
            if fresh and not ok(new, fresh):
                continue
            yield from search(rest, new)

    seen = set()
    rows = []
    for b in search(list(q.patterns), {}):
        key = tuple(b[v] for v in q.select)
        if key in seen:
            continue
        seen.add(key)
        rows.append({v: b[v] for v in q.select})
    rows.sort(key=lambda r: tuple(r[v].n3() for v in q.select))
    return BindingSet(list(q.select), rows)
