"""Turtle output with prefix compaction, plus a reader for the same subset.

The reader understands what :func:`serialize_turtle` writes (``@prefix``,
``PREFIX``, prefixed names, ``a``, ``;`` and ``,`` lists, quoted literals,
numeric and boolean shorthands).  Collections, ``[ ]`` blank nodes and
long-quoted strings are not supported.
"""

from __future__ import annotations

import re
from collections import defaultdict
from typing import Iterable, Mapping

from eboca.rdf.graph import Graph
from eboca.rdf.ntriples import _unescape
from eboca.rdf.terms import (
    RDF_NS,
    XSD,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    TermError,
    Triple,
)

RDF_TYPE = RDF_NS + "type"

_PREFIX_NAME = re.compile(r"^([A-Za-z][A-Za-z0-9_\-]*)?$")
# Conservative PN_LOCAL: no escapes other than %XX, never ends with '.'.
_LOCAL = re.compile(r"^(?:[A-Za-z0-9_:]|%[0-9A-Fa-f]{2})(?:[A-Za-z0-9_\-.:]|%[0-9A-Fa-f]{2})*$")


class TurtleError(ValueError):
    def __init__(self, line: int, token: str, message: str):
        self.line = line
        self.token = token
        super().__init__(f"line {line}: {message} near {token!r}")


class _Compactor:
    def __init__(self, prefixes: Mapping[str, str]):
        # longest namespace first, ties broken by prefix name
        self._pairs = sorted(prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    def iri(self, iri: Iri) -> str:
        for prefix, ns in self._pairs:
            if iri.value.startswith(ns):
                local = iri.value[len(ns):]
                if local == "" or (_LOCAL.match(local) and not local.endswith(".")):
                    return f"{prefix}:{local}"
        return iri.n3()

    def term(self, t: Term) -> str:
        if isinstance(t, Iri):
            return self.iri(t)
        if isinstance(t, Literal) and t.language is None and t.datatype.value != XSD_STRING:
            quoted = t.n3().rsplit("^^", 1)[0]
            return quoted + "^^" + self.iri(t.datatype)
        return t.n3()


def serialize_turtle(g: Iterable[Triple], prefixes: Mapping[str, str] | None = None) -> bytes:
    prefixes = dict(prefixes or {})
    for name, ns in prefixes.items():
        if not _PREFIX_NAME.match(name):
            raise ValueError(f"invalid prefix name: {name!r}")
        Iri(ns)
    comp = _Compactor(prefixes)

    by_subject: dict[Term, dict[Term, list[Term]]] = defaultdict(lambda: defaultdict(list))
    for s, p, o in g:
        by_subject[s][p].append(o)

    out = [f"@prefix {name}: <{ns}> ." for name, ns in sorted(prefixes.items())]
    if out:
        out.append("")
    for s in sorted(by_subject):
        preds = by_subject[s]
        chunks = []
        for p in sorted(preds):
            pred = "a" if p.value == RDF_TYPE else comp.iri(p)
            objs = ", ".join(comp.term(o) for o in sorted(preds[p]))
            chunks.append(f"{pred} {objs}")
        out.append(comp.term(s) + " " + " ;\n    ".join(chunks) + " .")
        out.append("")
    if not out:
        return b""
    return ("\n".join(out).rstrip("\n") + "\n").encode("utf-8")


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<iri><(?:[^<>"{}|^`\\\x00-\x20]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*>)
  | (?P<string>"(?:[^"\\\n\r]|\\.)*")
  | (?P<lang>@[a-zA-Z]+(?:-[a-zA-Z0-9]+)*)
  | (?P<dtmark>\^\^)
  | (?P<bnode>_:[A-Za-z0-9_]+)
  | (?P<number>[+-]?(?:[0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)(?:[eE][+-]?[0-9]+)?(?=[\s,;.\]]|$))
  | (?P<pname>(?:[A-Za-z][A-Za-z0-9_\-]*)?:(?:(?:[A-Za-z0-9_:]|%[0-9A-Fa-f]{2})(?:[A-Za-z0-9_\-.:]|%[0-9A-Fa-f]{2})*(?<!\.))?)
  | (?P<word>[A-Za-z@]+)
  | (?P<punct>[.;,])
    """,
    re.VERBOSE,
)


def _tokens(text: str):
    pos = 0
    line = 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TurtleError(line, text[pos:pos + 20].split()[0], "unrecognised token")
        kind = m.lastgroup
        if kind != "ws":
            yield kind, m.group(0), line
        line += m.group(0).count("\n")
        pos = m.end()


def parse_turtle(doc: bytes | str) -> Graph:
    """Read the Turtle subset written by :func:`serialize_turtle`."""
    text = doc.decode("utf-8") if isinstance(doc, (bytes, bytearray)) else doc
    toks = list(_tokens(text))
    prefixes: dict[str, str] = {}
    g = Graph()
    i = 0

    def peek():
        return toks[i] if i < len(toks) else ("eof", "<end of input>", toks[-1][2] if toks else 1)

    def take():
        nonlocal i
        tok = peek()
        i += 1
        return tok

    def expand(tok) -> Iri:
        kind, value, line = tok
        try:
            if kind == "iri":
                return Iri(_unescape(value[1:-1]))
            if kind == "pname":
                prefix, local = value.split(":", 1)
                if prefix not in prefixes:
                    raise TurtleError(line, value, f"undeclared prefix {prefix!r}")
                return Iri(prefixes[prefix] + local)
        except TermError as exc:
            raise TurtleError(line, value, str(exc)) from None
        raise TurtleError(line, value, "expected IRI")

    def term(tok) -> Term:
        kind, value, line = tok
        if kind in ("iri", "pname"):
            return expand(tok)
        if kind == "bnode":
            return BlankNode(value[2:])
        if kind == "number":
            if re.search(r"[eE]", value):
                return Literal(value, XSD + "double")
            return Literal(value, XSD + ("decimal" if "." in value else "integer"))
        if kind == "word" and value in ("true", "false"):
            return Literal(value, XSD + "boolean")
        if kind == "string":
            lexical = _unescape(value[1:-1])
            nxt = peek()
            if nxt[0] == "lang":
                take()
                return Literal(lexical, language=nxt[1][1:])
            if nxt[0] == "dtmark":
                take()
                return Literal(lexical, datatype=expand(take()))
            return Literal(lexical)
        raise TurtleError(line, value, "expected RDF term")

    while i < len(toks):
        kind, value, line = take()
        if (kind == "word" and value.lower() in ("@prefix", "prefix")) or (kind == "lang" and value == "@prefix"):
            name_tok = take()
            if name_tok[0] != "pname" or not name_tok[1].endswith(":"):
                raise TurtleError(name_tok[2], name_tok[1], "expected prefix name")
            ns = take()
            if ns[0] != "iri":
                raise TurtleError(ns[2], ns[1], "expected namespace IRI")
            prefixes[name_tok[1][:-1]] = ns[1][1:-1]
            if value.startswith("@"):
                dot = take()
                if dot[1] != ".":
                    raise TurtleError(dot[2], dot[1], "expected '.' after @prefix")
            continue
        subject = term((kind, value, line))
        if isinstance(subject, Literal):
            raise TurtleError(line, value, "literal in subject position")
        while True:
            ptok = take()
            pred = Iri(RDF_TYPE) if ptok[0] == "word" and ptok[1] == "a" else expand(ptok)
            while True:
                g.add(Triple(subject, pred, term(take())))
                sep = take()
                if sep[1] == ",":
                    continue
                break
            if sep[1] == ";":
                if peek()[1] == ".":
                    take()
                    break
                continue
            if sep[1] == ".":
                break
            raise TurtleError(sep[2], sep[1], "expected ',', ';' or '.'")
    return g
