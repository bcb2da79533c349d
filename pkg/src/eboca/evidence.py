"""Turn entity-extraction output into associations annotated with evidence.

Input is one JSON object per paragraph (JSON Lines)::

    {"paragraph_id": "PMC123-p4", "text": "...", "section": "Results",
     "extracted_on": "2022-05-01",
     "expression": {"expression_id": "PMC123", "title": "...", "abstract": "...",
                    "url": "https://..."},
     "entities": [{"surface": "HCQ", "normalized_id": "CHEBI:5801",
                   "kind": "Drug", "confidence": 0.91}, ...],
     "extractor": {"name": "BioNER+BioNEN", "version": "1.0", "agent": "..."}}

Entities that share a normalized id within a paragraph are one concept, and
every unordered pair of type-compatible concepts becomes an association with
a single computational-inference evidence derived from the paragraph.
"""

from __future__ import annotations

import datetime as dt
import enum
import hashlib
import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import IO, Iterable

from eboca.rdf.graph import Graph
from eboca.rdf.terms import Iri, Literal, Triple
from eboca.schema import vocab as V
from eboca.schema.model import (
    AssociationKind,
    AssociationRecord,
    ConceptEntity,
    ConceptKind,
    ValidationError,
    association_to_triples,
    check_unit_interval,
    concept_to_triples,
    double,
    mint_iri,
)

log = logging.getLogger(__name__)

EXTRACTOR_KINDS = (ConceptKind.Disease, ConceptKind.Drug, ConceptKind.Gene)

# Kind pairs that co-occurrence may turn into an association, keyed by the
# alphabetically sorted kind names; value is (kind, source kind).
PAIR_RULES = {
    ("Disease", "Drug"): (AssociationKind.DrugDiseaseInferred, ConceptKind.Drug),
    ("Disease", "Gene"): (AssociationKind.DiseaseGene, ConceptKind.Disease),
    ("Drug", "Drug"): (AssociationKind.DrugDrugInteraction, ConceptKind.Drug),
}


class EvidenceKind(enum.Enum):
    ComputationalInference = V.COMPUTATIONAL_INFERENCE
    DocumentedStatement = V.DOCUMENTED_STATEMENT


@dataclass(frozen=True)
class ExpressionMeta:
    expression_id: str
    title: str | None = None
    abstract: str | None = None
    url: str | None = None

    def __post_init__(self):
        if not self.expression_id:
            raise ValidationError("expression_id must be non-empty")
        if self.url is not None:
            Iri(self.url)

    @property
    def iri(self) -> Iri:
        return mint_iri("expression", self.expression_id)


@dataclass(frozen=True)
class SoftwareMeta:
    name: str
    version: str = ""
    agent: str | None = None

    def __post_init__(self):
        if not self.name:
            raise ValidationError("software name must be non-empty")

    @property
    def iri(self) -> Iri:
        return mint_iri("software", f"{self.name} {self.version}".strip())


@dataclass(frozen=True)
class EntityMention:
    surface: str
    normalized_id: str
    kind: ConceptKind
    confidence: float | None = None

    def __post_init__(self):
        if self.kind not in EXTRACTOR_KINDS:
            raise ValidationError(f"extractor entities are Disease, Drug or Gene, got {self.kind.name}")
        check_unit_interval(self.confidence, "entity confidence")


@dataclass(frozen=True)
class ParagraphExtraction:
    paragraph_id: str
    text: str
    expression: ExpressionMeta
    extractor: SoftwareMeta
    entities: tuple[EntityMention, ...] = ()
    section: str | None = None
    extracted_on: dt.date | None = None

    def __post_init__(self):
        if not self.paragraph_id:
            raise ValidationError("paragraph_id must be non-empty")
        object.__setattr__(self, "entities", tuple(self.entities))

    @property
    def iri(self) -> Iri:
        return mint_iri("paragraph", self.paragraph_id)


@dataclass(frozen=True)
class EvidenceRecord:
    evidence_id: str
    kind: EvidenceKind
    created_on: dt.date
    derived_from: Iri | None = None
    updated_on: dt.date | None = None
    version: str | None = None
    software: SoftwareMeta | None = None
    creator: str | None = None
    confidence: float | None = None

    def __post_init__(self):
        if not self.evidence_id:
            raise ValidationError("evidence_id must be non-empty")
        if not isinstance(self.created_on, dt.date):
            raise ValidationError(f"created_on must be a date, got {self.created_on!r}")
        check_unit_interval(self.confidence, "evidence confidence")

    @property
    def iri(self) -> Iri:
        return mint_iri("evidence", self.evidence_id)


def _parse_date(value, what: str) -> dt.date | None:
    if value is None or value == "":
        return None
    try:
        return dt.date.fromisoformat(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{what} is not an ISO-8601 date: {value!r}") from None


def _kind(name: str) -> ConceptKind:
    for k in EXTRACTOR_KINDS:
        if k.name.lower() == str(name).lower():
            return k
    raise ValidationError(f"unsupported entity kind {name!r}")


def paragraph_from_dict(obj: dict) -> ParagraphExtraction:
    try:
        expr = obj["expression"]
        ext = obj["extractor"]
        return ParagraphExtraction(
            paragraph_id=obj["paragraph_id"],
            text=obj.get("text") or "",
            section=obj.get("section") or None,
            extracted_on=_parse_date(obj.get("extracted_on"), "extracted_on"),
            expression=ExpressionMeta(
                expression_id=expr["expression_id"],
                title=expr.get("title"),
                abstract=expr.get("abstract"),
                url=expr.get("url"),
            ),
            extractor=SoftwareMeta(
                name=ext["name"], version=str(ext.get("version") or ""), agent=ext.get("agent")
            ),
            entities=tuple(
                EntityMention(
                    surface=e.get("surface", ""),
                    normalized_id=e.get("normalized_id") or "",
                    kind=_kind(e["kind"]),
                    confidence=e.get("confidence"),
                )
                for e in obj.get("entities", ())
            ),
        )
    except KeyError as exc:
        raise ValidationError(f"missing field {exc.args[0]!r}") from None


def read_jsonl(fh: IO[str]) -> list[ParagraphExtraction]:
    out = []
    for lineno, line in enumerate(fh, start=1):
        if not line.strip():
            continue
        try:
            out.append(paragraph_from_dict(json.loads(line)))
        except (json.JSONDecodeError, ValidationError) as exc:
            raise ValidationError(f"record on line {lineno}: {exc}") from None
    return out


def _digest(*parts: str) -> str:
    return hashlib.sha256("\x1f".join(parts).encode("utf-8")).hexdigest()[:20]


def extract_associations(
    p: ParagraphExtraction,
    created_on: dt.date | None = None,
    warnings: list[str] | None = None,
) -> list[tuple[AssociationRecord, EvidenceRecord]]:
    when = p.extracted_on or created_on
    if when is None:
        raise ValidationError(f"paragraph {p.paragraph_id}: no extraction date given")

    # (kind, normalized id) -> best confidence seen, None if no mention carries one
    concepts: dict[tuple[ConceptKind, str], float | None] = {}
    for e in p.entities:
        if not e.normalized_id:
            msg = f"paragraph {p.paragraph_id}: entity {e.surface!r} has no normalized id; skipped"
            log.warning(msg)
            if warnings is not None:
                warnings.append(msg)
            continue
        key = (e.kind, e.normalized_id)
        prev = concepts.get(key)
        if e.confidence is not None and (prev is None or e.confidence > prev):
            concepts[key] = e.confidence
        else:
            concepts.setdefault(key, prev)

    keys = sorted(concepts, key=lambda k: (k[0].name, k[1]))
    out = []
    for a, b in combinations(keys, 2):
        rule = PAIR_RULES.get((a[0].name, b[0].name))
        if rule is None:
            continue
        kind, source_kind = rule
        src, tgt = (a, b) if a[0] is source_kind else (b, a)
        assoc = AssociationRecord(
            kind=kind,
            source=ConceptEntity(src[0], src[1]),
            target=ConceptEntity(tgt[0], tgt[1]),
            local_id=_digest(kind.slug, src[1], tgt[1]),
        )
        ca, cb = concepts[a], concepts[b]
        evidence = EvidenceRecord(
            evidence_id=_digest(
                p.paragraph_id, *sorted((f"{a[0].name}:{a[1]}", f"{b[0].name}:{b[1]}")),
                p.extractor.version,
            ),
            kind=EvidenceKind.ComputationalInference,
            created_on=when,
            derived_from=p.iri,
            version=p.extractor.version or None,
            software=p.extractor,
            creator=p.extractor.agent,
            confidence=min(ca, cb) if ca is not None and cb is not None else None,
        )
        out.append((assoc, evidence))
    return out


def documented_evidence(
    association: Iri,
    source: Iri,
    created_on: dt.date,
    *,
    version: str | None = None,
    creator: str | None = None,
    confidence: float | None = None,
) -> EvidenceRecord:
    """Evidence that an association is stated in a curated source."""
    return EvidenceRecord(
        evidence_id=_digest("documented", association.value, source.value),
        kind=EvidenceKind.DocumentedStatement,
        created_on=created_on,
        derived_from=source,
        version=version,
        creator=creator,
        confidence=confidence,
    )


def _agent(name: str) -> tuple[Iri, list[Triple]]:
    node = mint_iri("agent", name)
    return node, [Triple(node, V.RDF_TYPE, V.AGENT), Triple(node, V.FOAF_NAME, Literal(name))]


def evidence_to_triples(e: EvidenceRecord, association: Iri) -> list[Triple]:
    if e.kind is EvidenceKind.DocumentedStatement and e.derived_from is None:
        raise ValidationError(f"documented-statement evidence {e.evidence_id} needs derived_from")
    ev = e.iri
    out = [
        Triple(association, V.HAS_EVIDENCE, ev),
        Triple(ev, V.RDF_TYPE, V.EVIDENCE),
        Triple(ev, V.RDF_TYPE, e.kind.value),
        Triple(ev, V.CREATED_ON, Literal(e.created_on.isoformat(), V.XSD_DATE)),
    ]
    if e.derived_from is not None:
        out.append(Triple(ev, V.DERIVED_FROM, e.derived_from))
    if e.updated_on is not None:
        out.append(Triple(ev, V.LAST_UPDATE_ON, Literal(e.updated_on.isoformat(), V.XSD_DATE)))
    if e.version:
        out.append(Triple(ev, V.VERSION, Literal(e.version)))
    if e.software is not None:
        sw = e.software.iri
        out += [
            Triple(ev, V.CREATED_WITH, sw),
            Triple(sw, V.RDF_TYPE, V.SOFTWARE_AGENT),
            Triple(sw, V.RDFS_LABEL, Literal(e.software.name)),
        ]
        if e.software.version:
            out.append(Triple(sw, V.VERSION, Literal(e.software.version)))
    if e.creator:
        node, triples = _agent(e.creator)
        out.append(Triple(ev, V.CREATED_BY, node))
        out += triples
    if e.confidence is not None:
        out.append(Triple(ev, V.HAS_CONFIDENCE, double(e.confidence)))
    return out


def paragraph_to_triples(p: ParagraphExtraction) -> list[Triple]:
    para, expr = p.iri, p.expression.iri
    out = [
        Triple(para, V.RDF_TYPE, V.PARAGRAPH),
        Triple(para, V.IS_PART_OF, expr),
        Triple(expr, V.RDF_TYPE, V.EXPRESSION),
        Triple(para, V.IDENTIFIER, Literal(p.paragraph_id)),
        Triple(expr, V.IDENTIFIER, Literal(p.expression.expression_id)),
    ]
    if p.text:
        out.append(Triple(para, V.HAS_CONTENT, Literal(p.text)))
    if p.section:
        out.append(Triple(para, V.IN_SECTION, Literal(p.section)))
    m = p.expression
    if m.title:
        out.append(Triple(expr, V.TITLE, Literal(m.title)))
    if m.abstract:
        out.append(Triple(expr, V.ABSTRACT, Literal(m.abstract)))
    if m.url:
        out.append(Triple(expr, V.HAS_URL, Literal(m.url, V.XSD_ANYURI)))
    return out


@dataclass
class AnnotationResult:
    graph: Graph
    associations: int = 0
    evidences: int = 0
    warnings: list[str] = field(default_factory=list)


def annotate(
    paragraphs: Iterable[ParagraphExtraction],
    created_on: dt.date | None = None,
) -> AnnotationResult:
    """Build the evidence graph for a batch of paragraphs."""
    result = AnnotationResult(Graph())
    g = result.graph
    seen: set[str] = set()
    for p in paragraphs:
        if p.paragraph_id in seen:
            raise ValidationError(f"duplicate paragraph_id {p.paragraph_id!r} in batch")
        seen.add(p.paragraph_id)
        pairs = extract_associations(p, created_on, result.warnings)
        if not pairs:
            continue
        g.update(paragraph_to_triples(p))
        for assoc, ev in pairs:
            g.update(concept_to_triples(assoc.source))
            g.update(concept_to_triples(assoc.target))
            g.update(association_to_triples(assoc))
            g.update(evidence_to_triples(ev, assoc.iri))
            result.associations += 1
            result.evidences += 1
    return result
