from __future__ import annotations

import csv
import json
from collections import defaultdict
from pathlib import Path
from typing import Iterator
from urllib.parse import quote

from eboca.mapping.doc import (
    Constant,
    MappingDoc,
    MappingError,
    LogicalSource,
    Reference,
    Template,
    TripleMapRule,
)
from eboca.rdf.graph import Graph
from eboca.rdf.terms import Iri, Literal, TermError, Triple
from eboca.schema.vocab import RDF_TYPE

Record = dict


class SourceError(MappingError):
    def __init__(self, path: str, record: int | None, message: str):
        self.path = path
        self.record = record
        where = f"{path}, record {record}" if record is not None else path
        super().__init__(f"{where}: {message}")


def _header(path: Path, fmt: str) -> list[str]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh, delimiter="\t" if fmt == "tsv" else ",")
            return next(reader, [])
    except OSError as exc:
        raise SourceError(str(path), None, f"cannot read source: {exc.strerror}") from None


def check_headers(doc: MappingDoc, base_dir: str | Path) -> None:
    """Every field a CSV/TSV rule references must be in its source header."""
    base = Path(base_dir)
    headers: dict[LogicalSource, set[str]] = {}
    for rule in doc.rules:
        if rule.source.format == "json":
            continue
        if rule.source not in headers:
            headers[rule.source] = set(_header(base / rule.source.path, rule.source.format))
        have = headers[rule.source]
        for f in rule.referenced_fields():
            if f not in have:
                raise MappingError(f"rule {rule.name}: field {{{f}}} is not a column of {rule.source.path}")
        for j in rule.joins:
            parent = doc.rule(j.parent)
            if parent.source.format == "json":
                continue
            if parent.source not in headers:
                headers[parent.source] = set(_header(base / parent.source.path, parent.source.format))
            if j.parent_field not in headers[parent.source]:
                raise MappingError(
                    f"rule {rule.name}: join field {j.parent_field!r} is not a column of {parent.source.path}"
                )


def _read_delimited(path: Path, fmt: str) -> list[Record]:
    rows = []
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh, delimiter="\t" if fmt == "tsv" else ",", strict=True)
            if not reader.fieldnames:
                raise SourceError(str(path), None, "missing header row")
            try:
                for n, row in enumerate(reader, start=1):
                    if None in row or None in row.values():
                        raise SourceError(
                            str(path), n, f"expected {len(reader.fieldnames)} fields"
                        )
                    rows.append(row)
            except csv.Error as exc:
                raise SourceError(str(path), reader.line_num, str(exc)) from None
            except UnicodeDecodeError:
                raise SourceError(str(path), reader.line_num, "not valid UTF-8") from None
    except OSError as exc:
        raise SourceError(str(path), None, f"cannot read source: {exc.strerror}") from None
    return rows


def _json_value(value) -> str | None:
    if value is None or isinstance(value, (dict, list)):
        return None
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _flatten(obj: dict, prefix: str = "") -> Record:
    out = {}
    for k, v in obj.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        else:
            s = _json_value(v)
            if s is not None:
                out[key] = s
    return out


def _read_json(path: Path, iterator: str) -> list[Record]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SourceError(str(path), None, f"cannot read source: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SourceError(str(path), None, f"invalid JSON: {exc}") from None
    node = data
    keys, star = iterator[1:], iterator.endswith("[*]")
    if star:
        keys = keys[:-3]
    for key in filter(None, keys.split(".")):
        if not isinstance(node, dict) or key not in node:
            raise SourceError(str(path), None, f"iterator {iterator} does not match")
        node = node[key]
    items = node if isinstance(node, list) else [node]
    out = []
    for n, item in enumerate(items, start=1):
        if not isinstance(item, dict):
            raise SourceError(str(path), n, "record is not a JSON object")
        out.append(_flatten(item))
    return out


def load_records(source: LogicalSource, base_dir: str | Path) -> list[Record]:
    path = Path(base_dir) / source.path
    if source.format == "json":
        return _read_json(path, source.iterator)
    return _read_delimited(path, source.format)


class _Expander:
    """Fills templates and builds terms, reusing identical IRI objects."""

    def __init__(self):
        self._iris: dict[str, Iri] = {}

    def iri(self, value: str) -> Iri:
        found = self._iris.get(value)
        if found is None:
            found = self._iris[value] = Iri(value)
        return found

    def fill(self, parts: list[str], rec: Record) -> Iri | None:
        out = []
        for i, part in enumerate(parts):
            if i % 2:
                v = rec.get(part)
                if not v:
                    return None
                out.append(quote(v, safe=""))
            else:
                out.append(part)
        return self.iri("".join(out))


def _compile(rule: TripleMapRule):
    maps = []
    for pred, om in rule.po_maps:
        if isinstance(om, Template):
            maps.append((pred, "t", om.parts()))
        elif isinstance(om, Reference):
            maps.append((pred, "r", om))
        else:
            maps.append((pred, "c", om.value))
    return maps


def _rule_triples(rule: TripleMapRule, records: list[Record], subjects: list, ex: _Expander) -> Iterator[Triple]:
    maps = _compile(rule)
    cls = rule.subject_class
    for rec, s in zip(records, subjects):
        if s is None:
            continue
        if cls is not None:
            yield Triple(s, RDF_TYPE, cls)
        for pred, how, spec in maps:
            if how == "t":
                o = ex.fill(spec, rec)
                if o is None:
                    continue
            elif how == "r":
                v = rec.get(spec.field)
                if not v:
                    continue
                o = Literal(v, spec.datatype, spec.language)
            else:
                o = spec
            yield Triple(s, pred, o)


def materialize(m: MappingDoc, base_dir: str | Path) -> Graph:
    """Execute every rule over its source and return the resulting graph."""
    check_headers(m, base_dir)
    cache: dict[LogicalSource, list[Record]] = {}
    ex = _Expander()
    subjects: dict[str, list] = {}
    g = Graph()

    for rule in m.rules:
        if rule.source not in cache:
            cache[rule.source] = load_records(rule.source, base_dir)
        parts = rule.subject.parts()
        try:
            subjects[rule.name] = [ex.fill(parts, rec) for rec in cache[rule.source]]
        except TermError as exc:
            raise MappingError(f"rule {rule.name}: {exc}") from None

    for rule in m.rules:
        records = cache[rule.source]
        try:
            for t in _rule_triples(rule, records, subjects[rule.name], ex):
                g.add(t)
        except TermError as exc:
            raise MappingError(f"rule {rule.name}: {exc}") from None
        for j in rule.joins:
            parent = m.rule(j.parent)
            index: dict[str, list[Iri]] = defaultdict(list)
            for prec, ps in zip(cache[parent.source], subjects[parent.name]):
                key = prec.get(j.parent_field)
                if key and ps is not None:
                    index[key].append(ps)
            for rec, s in zip(records, subjects[rule.name]):
                key = rec.get(j.child_field)
                if s is None or not key:
                    continue
                for ps in index.get(key, ()):
                    g.add(Triple(s, j.predicate, ps))
    return g
