"""Ontology pitfall scan for P04, P08, P11, P13 and P22.

Only terms declared with ``rdf:type`` owl:Class, owl:ObjectProperty or
owl:DatatypeProperty are inspected.  Terms outside the EBOCA namespaces are
skipped unless ``include_reused`` is set.
"""

from __future__ import annotations

import re

from eboca.rdf.graph import Graph
from eboca.rdf.terms import Iri, Term
from eboca.schema import vocab as V
from eboca.validate.findings import Finding, sort_findings

CATEGORIES = {
    V.OWL_CLASS: "class",
    V.OWL_OBJECT_PROPERTY: "object property",
    V.OWL_DATATYPE_PROPERTY: "datatype property",
}
ANNOTATIONS = (V.RDFS_LABEL, V.RDFS_COMMENT)

# Checked in order; the first match decides the bucket.
NAMING_STYLES = (
    ("code", re.compile(r"^[A-Z]+_?[0-9]+$")),
    ("snake_case", re.compile(r"^[A-Za-z][A-Za-z0-9]*(_[A-Za-z0-9]+)+$")),
    ("camelCase", re.compile(r"^[A-Za-z][a-z0-9]*([A-Z][a-z0-9]*)*$")),
)


def local_name(iri: Iri) -> str:
    v = iri.value
    cut = max(v.rfind("#"), v.rfind("/"), v.rfind(":"))
    return v[cut + 1:]


def naming_style(name: str) -> str | None:
    for style, rx in NAMING_STYLES:
        if rx.match(name):
            return style
    return None


def _declared(g: Graph, include_reused: bool) -> dict[Term, str]:
    out: dict[Term, str] = {}
    for cls, category in CATEGORIES.items():
        for t in g.match(None, V.RDF_TYPE, cls):
            term = t.subject
            if not isinstance(term, Iri):
                continue
            if include_reused or V.in_created_namespace(term):
                # a term declared in two categories is reported under the first
                out.setdefault(term, category)
    return out


def _connected(g: Graph, term: Term) -> bool:
    for t in g.match(term, None, None):
        if t.predicate in ANNOTATIONS:
            continue
        if t.predicate == V.RDF_TYPE and t.object in CATEGORIES:
            continue
        return True
    for t in g.match(None, None, term):
        if t.subject != term:
            return True
    return False


def scan_pitfalls(ontology: Graph, include_reused: bool = False) -> list[Finding]:
    declared = _declared(ontology, include_reused)
    findings = []
    for term, category in declared.items():
        if not _connected(ontology, term):
            findings.append(Finding("P04", term, f"{category} is not connected to any other element"))
        if not any(ontology.match(term, a, None) for a in ANNOTATIONS):
            findings.append(Finding("P08", term, f"{category} has neither rdfs:label nor rdfs:comment"))
        if category != "class":
            missing = [
                name
                for name, pred in (("domain", V.RDFS_DOMAIN), ("range", V.RDFS_RANGE))
                if not ontology.match(term, pred, None)
            ]
            if missing:
                findings.append(Finding("P11", term, f"{category} has no {' or '.join(missing)}"))
        if category == "object property":
            if not ontology.match(term, V.OWL_INVERSE_OF, None) and not ontology.match(None, V.OWL_INVERSE_OF, term):
                findings.append(Finding("P13", term, "no inverse property declared"))
    findings += _naming(declared)
    return sort_findings(findings)


def _naming(declared: dict[Term, str]) -> list[Finding]:
    findings = []
    for category in CATEGORIES.values():
        buckets: dict[str, list[Term]] = {}
        for term, cat in declared.items():
            if cat != category:
                continue
            style = naming_style(local_name(term))
            if style is not None:
                buckets.setdefault(style, []).append(term)
        if len(buckets) < 2:
            continue
        order = [s for s, _ in NAMING_STYLES]
        majority = max(buckets, key=lambda s: (len(buckets[s]), -order.index(s)))
        for style, terms in buckets.items():
            if style == majority:
                continue
            for term in terms:
                findings.append(Finding(
                    "P22", term,
                    f"{category} name {local_name(term)!r} is {style}; most {category} names are {majority}",
                ))
    return findings
