"""RDF terms and triples.

Every term carries its N-Triples form, computed once at construction.  Equality,
hashing and canonical ordering all go through that string, which keeps graph
indexes cheap and makes serialization a lookup.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Union

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD_STRING = XSD + "string"
RDF_LANGSTRING = RDF_NS + "langString"

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_BAD_IRI_CHAR = re.compile(r"[\x00-\x20\x7f-\x9f]")
_BNODE_LABEL = re.compile(r"^[A-Za-z0-9_]+$")
_LANG = re.compile(r"^[a-zA-Z]+(-[a-zA-Z0-9]+)*$")

# Characters allowed in IRI values but forbidden raw inside an N-Triples IRIREF.
_IRI_ESCAPES = {c: "\\u%04X" % ord(c) for c in '<>"{}|^`\\'}

_ECHAR = {
    "\b": "\\b",
    "\t": "\\t",
    "\n": "\\n",
    "\f": "\\f",
    "\r": "\\r",
    '"': '\\"',
    "\\": "\\\\",
}
_NEEDS_ESCAPE = re.compile(r'[\x00-\x1f"\\\x7f]')


class TermError(ValueError):
    """A term or triple violates the RDF data model."""


def _escape_char(m: re.Match) -> str:
    c = m.group(0)
    return _ECHAR.get(c) or "\\u%04X" % ord(c)


def escape_string(s: str) -> str:
    return _NEEDS_ESCAPE.sub(_escape_char, s)


def _escape_iri(value: str) -> str:
    if any(c in value for c in _IRI_ESCAPES):
        return "".join(_IRI_ESCAPES.get(c, c) for c in value)
    return value


class Term:
    __slots__ = ("_nt",)

    def n3(self) -> str:
        """The term in N-Triples syntax."""
        return self._nt

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Term) and self._nt == other._nt

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def __lt__(self, other: "Term") -> bool:
        return self._nt < other._nt

    def __hash__(self) -> int:
        return hash(self._nt)

    def __str__(self) -> str:
        return self._nt

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._nt})"


class Iri(Term):
    __slots__ = ("value",)

    def __init__(self, value: str):
        if not isinstance(value, str) or not value:
            raise TermError("IRI must be a non-empty string")
        if _BAD_IRI_CHAR.search(value):
            raise TermError(f"IRI contains whitespace or control characters: {value!r}")
        if not _SCHEME.match(value):
            raise TermError(f"IRI is not absolute (no scheme): {value!r}")
        self.value = value
        self._nt = "<" + _escape_iri(value) + ">"

    def __repr__(self) -> str:
        return f"Iri({self.value!r})"


class BlankNode(Term):
    __slots__ = ("label",)

    def __init__(self, label: str):
        if not isinstance(label, str) or not _BNODE_LABEL.match(label):
            raise TermError(f"invalid blank node label: {label!r}")
        self.label = label
        self._nt = "_:" + label


class Literal(Term):
    __slots__ = ("lexical", "datatype", "language")

    def __init__(
        self,
        lexical: str,
        datatype: Iri | str | None = None,
        language: str | None = None,
    ):
        if not isinstance(lexical, str):
            raise TermError(f"literal lexical form must be a string, got {type(lexical).__name__}")
        if isinstance(datatype, str):
            datatype = Iri(datatype)
        if language is not None:
            if not _LANG.match(language):
                raise TermError(f"invalid language tag: {language!r}")
            language = language.lower()
            if datatype is None:
                datatype = Iri(RDF_LANGSTRING)
            elif datatype.value != RDF_LANGSTRING:
                raise TermError("a language-tagged literal must have datatype rdf:langString")
        else:
            if datatype is None:
                datatype = Iri(XSD_STRING)
            elif datatype.value == RDF_LANGSTRING:
                raise TermError("rdf:langString literal requires a language tag")
        self.lexical = lexical
        self.datatype = datatype
        self.language = language
        quoted = '"' + escape_string(lexical) + '"'
        if language is not None:
            self._nt = quoted + "@" + language
        elif datatype.value == XSD_STRING:
            self._nt = quoted
        else:
            self._nt = quoted + "^^" + datatype._nt

    def __repr__(self) -> str:
        return f"Literal({self._nt})"


Subject = Union[Iri, BlankNode]


class Triple(NamedTuple):
    subject: Subject
    predicate: Iri
    object: Term

    def n3(self) -> str:
        """One N-Triples statement line, without the newline."""
        return f"{self.subject._nt} {self.predicate._nt} {self.object._nt} ."


def triple(s: Subject, p: Iri, o: Term) -> Triple:
    """Build a triple, checking the position constraints of the data model."""
    if not isinstance(s, (Iri, BlankNode)):
        raise TermError(f"subject must be an IRI or blank node, got {s!r}")
    if not isinstance(p, Iri):
        raise TermError(f"predicate must be an IRI, got {p!r}")
    if not isinstance(o, Term):
        raise TermError(f"object must be an RDF term, got {o!r}")
    return Triple(s, p, o)
