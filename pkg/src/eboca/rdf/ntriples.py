"""Canonical N-Triples writer and a strict N-Triples reader."""

from __future__ import annotations

import re
from typing import Iterable

from eboca.rdf.graph import Graph
from eboca.rdf.terms import BlankNode, Iri, Literal, Term, TermError, Triple

_WS = re.compile(r"[ \t]*")
_IRIREF = re.compile(r'<([^\x00-\x20<>"{}|^`\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*>')
_BNODE = re.compile(r"_:[A-Za-z0-9_]+")
_STRING = re.compile(r'"((?:[^"\\\n\r]|\\[tbnrf"\'\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*)"')
_LANGTAG = re.compile(r"@[a-zA-Z]+(-[a-zA-Z0-9]+)*")
_UNESCAPE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))")
_ECHARS = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


class NTriplesError(ValueError):
    def __init__(self, line: int, token: str, message: str):
        self.line = line
        self.token = token
        super().__init__(f"line {line}: {message} near {token!r}")


def _unescape(s: str) -> str:
    def repl(m: re.Match) -> str:
        if m.group(1) or m.group(2):
            return chr(int(m.group(1) or m.group(2), 16))
        return _ECHARS[m.group(3)]

    return _UNESCAPE.sub(repl, s) if "\\" in s else s


def statement_lines(triples: Iterable[Triple]) -> list[str]:
    return sorted(t.n3() for t in triples)


def serialize_ntriples(g: Iterable[Triple]) -> bytes:
    """Sorted, one-statement-per-line N-Triples; equal graphs give equal bytes."""
    lines = statement_lines(g)
    if not lines:
        return b""
    return ("\n".join(lines) + "\n").encode("utf-8")


class _LineParser:
    def __init__(self, text: str, lineno: int):
        self.text = text
        self.pos = 0
        self.lineno = lineno

    def fail(self, message: str) -> NTriplesError:
        token = self.text[self.pos:].split(None, 1)
        return NTriplesError(self.lineno, token[0] if token else "<end of line>", message)

    def skip_ws(self) -> None:
        self.pos = _WS.match(self.text, self.pos).end()

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text) or self.text[self.pos] == "#"

    def iri(self) -> Iri:
        m = _IRIREF.match(self.text, self.pos)
        if not m:
            raise self.fail("expected IRI")
        self.pos = m.end()
        try:
            return Iri(_unescape(m.group(0)[1:-1]))
        except TermError as exc:
            self.pos = m.start()
            raise self.fail(str(exc)) from None

    def subject(self) -> Term:
        self.skip_ws()
        if self.text.startswith("_:", self.pos):
            return self.bnode()
        return self.iri()

    def bnode(self) -> BlankNode:
        m = _BNODE.match(self.text, self.pos)
        if not m or (m.end() < len(self.text) and self.text[m.end()] not in " \t.#"):
            raise self.fail("expected blank node label [A-Za-z0-9_]+")
        self.pos = m.end()
        return BlankNode(m.group(0)[2:])

    def object(self) -> Term:
        self.skip_ws()
        c = self.text[self.pos:self.pos + 1]
        if c == "<":
            return self.iri()
        if c == "_":
            return self.bnode()
        if c != '"':
            raise self.fail("expected IRI, blank node or literal")
        m = _STRING.match(self.text, self.pos)
        if not m:
            raise self.fail("unterminated or malformed string literal")
        self.pos = m.end()
        lexical = _unescape(m.group(1))
        try:
            if self.text.startswith("^^", self.pos):
                self.pos += 2
                return Literal(lexical, datatype=self.iri())
            lm = _LANGTAG.match(self.text, self.pos)
            if lm:
                self.pos = lm.end()
                return Literal(lexical, language=lm.group(0)[1:])
            return Literal(lexical)
        except TermError as exc:
            raise self.fail(str(exc)) from None

    def statement(self) -> Triple:
        s = self.subject()
        self.skip_ws()
        p = self.iri()
        o = self.object()
        self.skip_ws()
        if not self.text.startswith(".", self.pos):
            raise self.fail("statement is missing its terminating '.'")
        self.pos += 1
        if not self.at_end():
            raise self.fail("unexpected content after '.'")
        return Triple(s, p, o)


# Lines in the writer's own layout: single spaces, no comment.  Matching lines
# are split into term tokens that go through a per-document cache; anything
# else takes the general path.
_IRI_TOK = r'<[^\x00-\x20<>"{}|^`\\]*>'
_FAST_LINE = re.compile(
    rf'({_IRI_TOK}|_:[A-Za-z0-9_]+) ({_IRI_TOK}) '
    rf'({_IRI_TOK}|_:[A-Za-z0-9_]+|"(?:[^"\\\n\r]|\\.)*"(?:\^\^{_IRI_TOK}|@[a-zA-Z]+(?:-[a-zA-Z0-9]+)*)?) \.'
)


def _token_term(tok: str, lineno: int, kind: str) -> Term:
    lp = _LineParser(tok, lineno)
    term = getattr(lp, kind)()
    if lp.pos != len(tok):
        raise lp.fail("malformed term")
    return term


def iter_ntriples(doc: bytes | str) -> Iterable[Triple]:
    text = doc.decode("utf-8") if isinstance(doc, (bytes, bytearray)) else doc
    cache: dict[str, Term] = {}
    fast = _FAST_LINE.fullmatch
    # str.splitlines would also break on U+2028 and friends, which may appear raw in literals
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        m = fast(line)
        if m is not None:
            s_tok, p_tok, o_tok = m.groups()
            s = cache.get(s_tok)
            if s is None:
                s = cache[s_tok] = _token_term(s_tok, lineno, "subject")
            p = cache.get(p_tok)
            if p is None:
                p = cache[p_tok] = _token_term(p_tok, lineno, "iri")
            o = cache.get(o_tok)
            if o is None:
                o = cache[o_tok] = _token_term(o_tok, lineno, "object")
            yield Triple(s, p, o)
            continue
        lp = _LineParser(line, lineno)
        if lp.at_end():
            continue
        yield lp.statement()


def parse_ntriples(doc: bytes | str) -> Graph:
    """Parse an N-Triples document; duplicate statements collapse."""
    return Graph(iter_ntriples(doc))
