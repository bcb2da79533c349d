"""Instance-level checks of a knowledge graph against the association and
evidence models (rules E1 to E5)."""

from __future__ import annotations

import datetime as dt
import math
import re

from eboca.rdf.graph import Graph
from eboca.rdf.terms import Literal, Term
from eboca.schema import vocab as V
from eboca.schema.model import ASSOCIATION_BY_CLASS, CONCEPT_BY_CLASS
from eboca.validate.findings import Finding, sort_findings

_DATETIME = re.compile(r"^-?\d{4,}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}(\.\d+)?(Z|[+-]\d{2}:\d{2})?$")
_DATE = re.compile(r"^-?\d{4,}-\d{2}-\d{2}(Z|[+-]\d{2}:\d{2})?$")


def _types(g: Graph, node: Term) -> set[Term]:
    return {t.object for t in g.match(node, V.RDF_TYPE, None)}


def _unit_interval(lit: Term) -> bool:
    if not isinstance(lit, Literal):
        return False
    try:
        x = float(lit.lexical)
    except ValueError:
        return False
    return not math.isnan(x) and 0.0 <= x <= 1.0


def valid_date(lit: Literal) -> bool:
    text = lit.lexical
    if lit.datatype == V.XSD_DATETIME or "T" in text:
        if not _DATETIME.match(text):
            return False
        text = text.split("T", 1)[0]
    elif not _DATE.match(text):
        return False
    try:
        dt.date.fromisoformat(text[:10])
    except ValueError:
        return False
    return True


def check_associations(g: Graph) -> list[Finding]:
    out = []
    for cls, kind in ASSOCIATION_BY_CLASS.items():
        for t in g.match(None, V.RDF_TYPE, cls):
            a = t.subject
            ends = sorted({x.object for x in g.match(a, V.REFERS_TO, None)})
            if len(ends) != 2:
                out.append(Finding("E1", a, f"{kind.name} has {len(ends)} distinct endpoints, expected 2"))
                continue
            kinds = []
            for e in ends:
                ck = [CONCEPT_BY_CLASS[c] for c in _types(g, e) if c in CONCEPT_BY_CLASS]
                kinds.append(ck)
            if not all(kinds) or not any(
                kind.accepts(x, y) for x in kinds[0] for y in kinds[1]
            ):
                expected = " and ".join(k.name for k in kind.endpoints)
                out.append(Finding("E1", a, f"{kind.name} endpoints are not typed {expected}"))
    return out


def check_scores(g: Graph) -> list[Finding]:
    out = []
    for t in g.match(None, V.RDF_TYPE, V.SCORE):
        for v in g.match(t.subject, V.HAS_VALUE, None):
            if not _unit_interval(v.object):
                out.append(Finding("E2", t.subject, f"score value {v.object.n3()} is not a number in [0, 1]"))
    for v in g.match(None, V.HAS_CONFIDENCE, None):
        if not _unit_interval(v.object):
            out.append(Finding("E2", v.subject, f"confidence {v.object.n3()} is not a number in [0, 1]"))
    return out


def check_evidences(g: Graph) -> list[Finding]:
    nodes = {t.subject for t in g.match(None, V.RDF_TYPE, V.EVIDENCE)}
    for kind in V.ECO_KINDS:
        nodes |= {t.subject for t in g.match(None, V.RDF_TYPE, kind)}
    out = []
    for ev in sorted(nodes):
        kinds = [k for k in V.ECO_KINDS if (ev, V.RDF_TYPE, k) in g]
        if len(kinds) != 1:
            out.append(Finding("E3", ev, f"evidence has {len(kinds)} ECO evidence kinds, expected 1"))
        elif kinds[0] == V.DOCUMENTED_STATEMENT and not g.match(ev, V.DERIVED_FROM, None):
            out.append(Finding("E3", ev, "documented-statement evidence has no pav:derivedFrom"))
    return out


def check_dates(g: Graph) -> list[Finding]:
    out = []
    date_types = (V.XSD_DATE, V.XSD_DATETIME)
    for t in g:
        o = t.object
        if not isinstance(o, Literal):
            continue
        if o.datatype in date_types or t.predicate in (V.CREATED_ON, V.LAST_UPDATE_ON):
            if not valid_date(o):
                out.append(Finding("E4", t.subject, f"{o.n3()} is not a valid ISO-8601 date"))
    return out


def check_paragraphs(g: Graph) -> list[Finding]:
    out = []
    for t in g.match(None, V.RDF_TYPE, V.PARAGRAPH):
        parents = [x.object for x in g.match(t.subject, V.IS_PART_OF, None)]
        if not any((p, V.RDF_TYPE, V.EXPRESSION) in g for p in parents):
            out.append(Finding("E5", t.subject, "paragraph is not part of any fabio:Expression"))
    return out


RULES = (check_associations, check_scores, check_evidences, check_dates, check_paragraphs)


def validate_instances(g: Graph) -> list[Finding]:
    """All rule violations in ``g``, ordered by (code, subject)."""
    findings = []
    for rule in RULES:
        findings += rule(g)
    return sort_findings(findings)
