"""Reference implementations used only by the tests.

Each one is deliberately naive and shares no code path with the library
routine it checks beyond the parsed input objects.
"""

from __future__ import annotations

import csv
import itertools
import json
import re
from math import comb
from pathlib import Path
from urllib.parse import quote

from eboca.mapping import Constant, MappingDoc, Reference, Template
from eboca.query import Filter, Query, Var
from eboca.rdf import Iri, Literal, Triple

RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")


# --- mapping -----------------------------------------------------------------

def _records(base_dir: Path, source) -> list[dict]:
    path = Path(base_dir) / source.path
    if source.format == "json":
        data = json.loads(path.read_text("utf-8"))
        for key in source.iterator.lstrip("$").replace("[*]", "").split("."):
            if key:
                data = data[key]
        items = data if isinstance(data, list) else [data]

        def flat(obj, pre=""):
            out = {}
            for k, v in obj.items():
                if isinstance(v, dict):
                    out.update(flat(v, f"{pre}{k}."))
                elif isinstance(v, bool):
                    out[pre + k] = "true" if v else "false"
                elif v is not None and not isinstance(v, list):
                    out[pre + k] = str(v)
            return out

        return [flat(i) for i in items]
    delim = "\t" if source.format == "tsv" else ","
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh, delimiter=delim))


def _fill(pattern: str, rec: dict):
    missing = []

    def sub(m):
        v = rec.get(m.group(1))
        if not v:
            missing.append(m.group(1))
            return ""
        return quote(v, safe="")

    out = re.sub(r"\{([^{}]+)\}", sub, pattern)
    return None if missing else Iri(out)


def materialize_oracle(doc: MappingDoc, base_dir) -> set[Triple]:
    """Nested loops over rules, records and maps; joins by full cross product."""
    out: set[Triple] = set()
    rules = {r.name: r for r in doc.rules}
    for rule in doc.rules:
        for rec in _records(base_dir, rule.source):
            s = _fill(rule.subject.pattern, rec)
            if s is None:
                continue
            if rule.subject_class is not None:
                out.add(Triple(s, RDF_TYPE, rule.subject_class))
            for pred, om in rule.po_maps:
                if isinstance(om, Template):
                    o = _fill(om.pattern, rec)
                elif isinstance(om, Reference):
                    v = rec.get(om.field)
                    o = Literal(v, om.datatype, om.language) if v else None
                else:
                    assert isinstance(om, Constant)
                    o = om.value
                if o is not None:
                    out.add(Triple(s, pred, o))
            for j in rule.joins:
                parent = rules[j.parent]
                for prec in _records(base_dir, parent.source):
                    if rec.get(j.child_field) and rec.get(j.child_field) == prec.get(j.parent_field):
                        ps = _fill(parent.subject.pattern, prec)
                        if ps is not None:
                            out.add(Triple(s, j.predicate, ps))
    return out


# --- query -------------------------------------------------------------------

XSD = "http://www.w3.org/2001/XMLSchema#"
NUMERIC = {XSD + t for t in (
    "double", "float", "decimal", "integer", "int", "long", "short", "byte",
    "nonNegativeInteger", "positiveInteger", "negativeInteger", "nonPositiveInteger",
    "unsignedInt", "unsignedLong", "unsignedShort", "unsignedByte",
)}


def _num(t):
    if isinstance(t, Literal) and t.datatype.value in NUMERIC:
        try:
            x = float(t.lexical)
        except ValueError:
            return None
        return None if x != x else x
    return None


def _filter_ok(f: Filter, t) -> bool:
    if f.op == "regex":
        if not isinstance(t, Literal):
            return False
        return re.search(f.value, t.lexical, re.IGNORECASE if "i" in f.flags else 0) is not None
    x = _num(t)
    y = f.value if isinstance(f.value, float) else _num(f.value)
    if x is not None and y is not None:
        return {"=": x == y, "!=": x != y, "<": x < y, ">": x > y}[f.op]
    if isinstance(f.value, float):
        return False
    if f.op in ("=", "!="):
        return (t == f.value) == (f.op == "=")
    c = f.value
    if (isinstance(t, Literal) and isinstance(c, Literal) and x is None and y is None
            and t.datatype == c.datatype and t.language == c.language):
        return t.lexical < c.lexical if f.op == "<" else t.lexical > c.lexical
    return False


def _bind(slot, assignment):
    return assignment[slot.name] if isinstance(slot, Var) else slot


def enumerate_oracle(triples, q: Query) -> set[tuple[str, ...]]:
    """Try every assignment of graph terms to the query variables."""
    triples = set(triples)
    terms = sorted({x for t in triples for x in t})
    names = q.variables()
    rows = set()
    for values in itertools.product(terms, repeat=len(names)):
        a = dict(zip(names, values))
        if all(
            Triple(_bind(tp.s, a), _bind(tp.p, a), _bind(tp.o, a)) in triples
            for tp in q.patterns
        ) and all(_filter_ok(f, a[f.var]) for f in q.filters):
            rows.add(tuple(a[v].n3() for v in q.select))
    return rows


def pruned_enumeration_oracle(triples, q: Query) -> set[tuple[str, ...]]:
    """Assignment enumeration over the full term set, abandoning a partial
    assignment once some pattern whose variables are all bound is absent."""
    triples = set(triples)
    terms = sorted({x for t in triples for x in t})
    names = []
    pending = list(q.patterns)
    while len(names) < len(q.variables()):
        # bind next the variable that completes the most patterns
        rest = [v for v in q.variables() if v not in names]
        best = max(rest, key=lambda v: sum(
            set(tp.variables()) <= set(names) | {v} for tp in pending))
        names.append(best)
    checks = [[tp for tp in q.patterns if set(tp.variables()) <= set(names[:i + 1])
               and not set(tp.variables()) <= set(names[:i])] for i in range(len(names))]
    ground = [tp for tp in q.patterns if not tp.variables()]
    if any(Triple(tp.s, tp.p, tp.o) not in triples for tp in ground):
        return set()
    rows = set()

    def extend(i, a):
        if i == len(names):
            if all(_filter_ok(f, a[f.var]) for f in q.filters):
                rows.add(tuple(a[v].n3() for v in q.select))
            return
        for term in terms:
            a[names[i]] = term
            if all(Triple(_bind(tp.s, a), _bind(tp.p, a), _bind(tp.o, a)) in triples for tp in checks[i]):
                extend(i + 1, a)
        a.pop(names[i], None)

    extend(0, {})
    return rows


def scan_join_oracle(triples, q: Query) -> set[tuple[str, ...]]:
    """Patterns in written order, each matched by a full scan of the triple list."""
    triples = list(triples)
    partial = [{}]
    for tp in q.patterns:
        nxt = []
        for a in partial:
            for t in triples:
                b = dict(a)
                ok = True
                for slot, term in zip((tp.s, tp.p, tp.o), t):
                    if isinstance(slot, Var):
                        if b.setdefault(slot.name, term) != term:
                            ok = False
                            break
                    elif slot != term:
                        ok = False
                        break
                if ok:
                    nxt.append(b)
        partial = nxt
    return {
        tuple(a[v].n3() for v in q.select)
        for a in partial
        if all(_filter_ok(f, a[f.var]) for f in q.filters)
    }


# --- annotation ----------------------------------------------------------------

def pair_count(drugs: int, diseases: int, genes: int) -> int:
    return drugs * diseases + diseases * genes + comb(drugs, 2)


def brute_pairs(concepts: set[tuple[str, str]]) -> int:
    """Count unordered pairs of distinct concepts whose kinds may associate."""
    allowed = {frozenset({"Drug", "Disease"}), frozenset({"Disease", "Gene"}), frozenset({"Drug"})}
    n = 0
    items = sorted(concepts)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if frozenset({items[i][0], items[j][0]}) in allowed:
                n += 1
    return n
