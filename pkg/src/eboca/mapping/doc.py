"""Mapping documents: data model and the line-oriented text format."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from eboca.rdf.ntriples import _unescape
from eboca.rdf.terms import Iri, Literal, Term, TermError

FORMATS = ("csv", "tsv", "json")

_TOKEN = re.compile(r'<[^>]*>|"(?:[^"\\]|\\.)*"(?:@[A-Za-z0-9\-]+|\^\^\S+)?|\S+')
_SLOT = re.compile(r"\{([^{}]+)\}")
_PNAME = re.compile(r"^([A-Za-z][A-Za-z0-9_\-]*)?:(.*)$")
_ITERATOR = re.compile(r"^\$((?:\.[A-Za-z_][A-Za-z0-9_\-]*)*)(\[\*\])?$")


class MappingError(ValueError):
    """The mapping document is ill-formed or inconsistent."""


@dataclass(frozen=True)
class LogicalSource:
    path: str
    format: str
    iterator: str | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise MappingError(f"unknown source format {self.format!r}")
        if self.format == "json":
            if not self.iterator:
                raise MappingError(f"JSON source {self.path} needs an ITERATOR")
            if not _ITERATOR.match(self.iterator):
                raise MappingError(f"unsupported iterator {self.iterator!r}")
        elif self.iterator:
            raise MappingError(f"{self.format.upper()} source {self.path} takes no ITERATOR")


@dataclass(frozen=True)
class Template:
    """IRI template with ``{field}`` slots."""

    pattern: str

    @property
    def slots(self) -> tuple[str, ...]:
        return tuple(_SLOT.findall(self.pattern))

    def parts(self) -> list[str]:
        # even indexes are constant text, odd indexes are slot names
        return _SLOT.split(self.pattern)


@dataclass(frozen=True)
class Reference:
    field: str
    datatype: Iri | None = None
    language: str | None = None

    @property
    def slots(self) -> tuple[str, ...]:
        return (self.field,)


@dataclass(frozen=True)
class Constant:
    value: Term

    @property
    def slots(self) -> tuple[str, ...]:
        return ()


TermMap = Union[Template, Reference, Constant]


@dataclass(frozen=True)
class Join:
    predicate: Iri
    parent: str
    child_field: str
    parent_field: str


@dataclass
class TripleMapRule:
    name: str
    source: LogicalSource | None = None
    subject: Template | None = None
    subject_class: Iri | None = None
    po_maps: list[tuple[Iri, TermMap]] = field(default_factory=list)
    joins: list[Join] = field(default_factory=list)

    def referenced_fields(self) -> list[str]:
        fields = list(self.subject.slots)
        for _, om in self.po_maps:
            fields += om.slots
        fields += [j.child_field for j in self.joins]
        return list(dict.fromkeys(fields))


@dataclass
class MappingDoc:
    prefixes: dict[str, str]
    rules: list[TripleMapRule]

    def rule(self, name: str) -> TripleMapRule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(name)


class _Parser:
    def __init__(self):
        self.prefixes: dict[str, str] = {}
        self.rules: list[TripleMapRule] = []
        self.lineno = 0

    def error(self, msg: str) -> MappingError:
        return MappingError(f"line {self.lineno}: {msg}")

    def expand(self, token: str) -> str:
        if token.startswith("<") and token.endswith(">"):
            return token[1:-1]
        m = _PNAME.match(token)
        if m:
            prefix = m.group(1) or ""
            if prefix not in self.prefixes:
                raise self.error(f"unknown prefix {prefix!r} in {token}")
            return self.prefixes[prefix] + m.group(2)
        raise self.error(f"expected IRI or prefixed name, got {token!r}")

    def iri(self, token: str) -> Iri:
        value = self.expand(token)
        if _SLOT.search(value):
            raise self.error(f"template slots are not allowed here: {token}")
        try:
            return Iri(value)
        except TermError as exc:
            raise self.error(str(exc)) from None

    def template(self, token: str) -> Template:
        t = Template(self.expand(token))
        try:
            Iri(_SLOT.sub("x", t.pattern))
        except TermError as exc:
            raise self.error(f"template does not produce an IRI: {exc}") from None
        return t

    def constant(self, token: str) -> Term:
        if token.startswith('"'):
            m = re.match(r'^"((?:[^"\\]|\\.)*)"(?:@([A-Za-z0-9\-]+)|\^\^(\S+))?$', token)
            if not m:
                raise self.error(f"malformed literal {token}")
            try:
                lexical = _unescape(m.group(1))
                if m.group(2):
                    return Literal(lexical, language=m.group(2))
                if m.group(3):
                    return Literal(lexical, self.iri(m.group(3)))
                return Literal(lexical)
            except TermError as exc:
                raise self.error(str(exc)) from None
        return self.iri(token)

    def current(self, keyword: str) -> TripleMapRule:
        if not self.rules:
            raise self.error(f"{keyword} before any RULE")
        return self.rules[-1]

    def line(self, text: str) -> None:
        toks = _TOKEN.findall(text)
        if not toks or toks[0].startswith("#"):
            return
        kw, args = toks[0].upper(), toks[1:]
        if kw == "PREFIX":
            if len(args) != 2 or not args[0].endswith(":") or not args[1].startswith("<"):
                raise self.error("expected: PREFIX name: <namespace>")
            ns = args[1][1:-1]
            try:
                Iri(ns)
            except TermError as exc:
                raise self.error(str(exc)) from None
            self.prefixes[args[0][:-1]] = ns
        elif kw == "RULE":
            if len(args) != 1:
                raise self.error("expected: RULE name")
            if any(r.name == args[0] for r in self.rules):
                raise self.error(f"duplicate rule name {args[0]!r}")
            self.rules.append(TripleMapRule(args[0]))
        elif kw == "SOURCE":
            rule = self.current(kw)
            if rule.source is not None:
                raise self.error(f"rule {rule.name} has more than one SOURCE")
            if len(args) == 2:
                rule.source = self._source(args[0].lower(), args[1], None)
            elif len(args) == 4 and args[2].upper() == "ITERATOR":
                rule.source = self._source(args[0].lower(), args[1], args[3])
            else:
                raise self.error("expected: SOURCE csv|tsv path  or  SOURCE json path ITERATOR $.path")
        elif kw == "SUBJECT":
            rule = self.current(kw)
            if len(args) != 1 or rule.subject is not None:
                raise self.error(f"rule {rule.name} needs exactly one SUBJECT template")
            rule.subject = self.template(args[0])
        elif kw == "CLASS":
            rule = self.current(kw)
            if len(args) != 1 or rule.subject_class is not None:
                raise self.error(f"rule {rule.name} takes one CLASS")
            rule.subject_class = self.iri(args[0])
        elif kw == "PO":
            rule = self.current(kw)
            if len(args) < 3:
                raise self.error("expected: PO predicate TEMPLATE|REF|CONST ...")
            rule.po_maps.append((self.iri(args[0]), self._object_map(args[1].upper(), args[2:])))
        elif kw == "JOIN":
            rule = self.current(kw)
            if len(args) != 3 or args[2].count("=") != 1:
                raise self.error("expected: JOIN predicate parent_rule child_field=parent_field")
            child, parent = args[2].split("=")
            if not child or not parent:
                raise self.error("JOIN condition needs both field names")
            rule.joins.append(Join(self.iri(args[0]), args[1], child, parent))
        else:
            raise self.error(f"unknown keyword {toks[0]!r}")

    def _source(self, fmt: str, path: str, iterator: str | None) -> LogicalSource:
        try:
            return LogicalSource(path.strip('"'), fmt, iterator)
        except MappingError as exc:
            raise self.error(str(exc)) from None

    def _object_map(self, kind: str, args: list[str]) -> TermMap:
        if kind == "TEMPLATE" and len(args) == 1:
            return self.template(args[0])
        if kind == "CONST" and len(args) == 1:
            return Constant(self.constant(args[0]))
        if kind == "REF":
            if len(args) == 1:
                return Reference(args[0])
            if len(args) == 3 and args[1].upper() == "DATATYPE":
                return Reference(args[0], datatype=self.iri(args[2]))
            if len(args) == 3 and args[1].upper() == "LANG":
                if not re.match(r"^[a-zA-Z]+(-[a-zA-Z0-9]+)*$", args[2]):
                    raise self.error(f"invalid language tag {args[2]!r}")
                return Reference(args[0], language=args[2].lower())
        raise self.error(f"malformed object map: {kind} {' '.join(args)}")


def _check(doc: MappingDoc) -> None:
    names = {r.name for r in doc.rules}
    for r in doc.rules:
        if r.source is None:
            raise MappingError(f"rule {r.name} has no SOURCE")
        if r.subject is None:
            raise MappingError(f"rule {r.name} has no SUBJECT")
        for j in r.joins:
            if j.parent not in names:
                raise MappingError(f"rule {r.name} joins unknown parent rule {j.parent!r}")

    graph = {r.name: [j.parent for j in r.joins] for r in doc.rules}
    state: dict[str, int] = {}

    def visit(n: str, path: list[str]) -> None:
        state[n] = 1
        for p in graph[n]:
            if state.get(p) == 1:
                cycle = path[path.index(p):] + [p] if p in path else [n, p]
                raise MappingError(f"cyclic join: {' -> '.join(cycle)}")
            if p not in state:
                visit(p, path + [p])
        state[n] = 2

    for r in doc.rules:
        if r.name not in state:
            visit(r.name, [r.name])


def parse_mapping_doc(doc: bytes | str, base_dir: str | Path | None = None) -> MappingDoc:
    """Parse and validate a mapping document.

    With ``base_dir`` the CSV/TSV headers are read too, so a template slot
    missing from its source is reported now instead of at materialization.
    """
    text = doc.decode("utf-8") if isinstance(doc, (bytes, bytearray)) else doc
    p = _Parser()
    for p.lineno, line in enumerate(text.splitlines(), start=1):
        p.line(line)
    p.lineno = 0
    result = MappingDoc(p.prefixes, p.rules)
    _check(result)
    if base_dir is not None:
        from eboca.mapping.engine import check_headers

        check_headers(result, base_dir)
    return result
