"""Typed biomedical concepts and associations, and their RDF emitters."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from urllib.parse import quote

from eboca.rdf.terms import Iri, Literal, Triple
from eboca.schema import vocab as V


class ValidationError(ValueError):
    pass


class ConceptKind(enum.Enum):
    Disease = ("disease", V.DISEASE)
    Gene = ("gene", V.GENE)
    Protein = ("protein", V.PROTEIN)
    ProteinClass = ("protein-class", V.PROTEIN_CLASS)
    Variant = ("variant", V.VARIANT)
    Pathway = ("pathway", V.PATHWAY)
    Drug = ("drug", V.DRUG)
    Phenotype = ("phenotype", V.PHENOTYPE)
    Target = ("target", V.TARGET)
    Organism = ("organism", V.ORGANISM)
    NcRNA = ("ncrna", V.NCRNA)

    def __init__(self, slug: str, class_iri: Iri):
        self.slug = slug
        self.class_iri = class_iri


CK = ConceptKind


class AssociationKind(enum.Enum):
    DiseaseGene = ("disease-gene", V.DISEASE_GENE_ASSOCIATION, (CK.Disease, CK.Gene))
    DiseaseVariant = ("disease-variant", V.DISEASE_VARIANT_ASSOCIATION, (CK.Disease, CK.Variant))
    DiseasePhenotype = ("disease-phenotype", V.DISEASE_PHENOTYPE_ASSOCIATION, (CK.Disease, CK.Phenotype))
    DrugDiseaseMarker = ("drug-disease-marker", V.DRUG_DISEASE_MARKER, (CK.Drug, CK.Disease))
    DrugDiseaseTherapeutic = ("drug-disease-therapeutic", V.DRUG_DISEASE_THERAPEUTIC, (CK.Drug, CK.Disease))
    DrugDiseaseInferred = ("drug-disease-inferred", V.DRUG_DISEASE_INFERRED, (CK.Drug, CK.Disease))
    DrugTargetMechanism = ("drug-target", V.DRUG_TARGET_ASSOCIATION, (CK.Drug, CK.Target))
    DrugIndication = ("drug-indication", V.DRUG_INDICATION, (CK.Drug, CK.Phenotype))
    SideEffect = ("side-effect", V.SIDE_EFFECT, (CK.Drug, CK.Phenotype))
    DrugDrugInteraction = ("drug-drug", V.DRUG_DRUG_INTERACTION, (CK.Drug, CK.Drug))
    GeneVariant = ("gene-variant", V.GENE_VARIANT_ASSOCIATION, (CK.Gene, CK.Variant))
    GenePathway = ("gene-pathway", V.GENE_PATHWAY_ASSOCIATION, (CK.Gene, CK.Pathway))
    ProteinProteinInteraction = ("protein-protein", V.PPI, (CK.Protein, CK.Protein))
    DiseaseNcRNA = ("disease-ncrna", V.DISEASE_NCRNA_ASSOCIATION, (CK.Disease, CK.NcRNA))

    def __init__(self, slug: str, class_iri: Iri, endpoints: tuple[ConceptKind, ConceptKind]):
        self.slug = slug
        self.class_iri = class_iri
        self.endpoints = endpoints

    def accepts(self, a: ConceptKind, b: ConceptKind) -> bool:
        return sorted((a.name, b.name)) == sorted(k.name for k in self.endpoints)


CONCEPT_BY_CLASS = {k.class_iri: k for k in ConceptKind}
ASSOCIATION_BY_CLASS = {k.class_iri: k for k in AssociationKind}

NODE_KINDS = ("evidence", "paragraph", "expression", "score", "software", "agent")


def mint_iri(kind: ConceptKind | AssociationKind | str, local_id: str) -> Iri:
    """Deterministic instance IRI ``{base}{kind-slug}/{percent-encoded id}``."""
    if not local_id:
        raise ValidationError("local_id must be non-empty")
    if isinstance(kind, (ConceptKind, AssociationKind)):
        slug = kind.slug
    elif kind in NODE_KINDS:
        slug = kind
    else:
        raise ValidationError(f"unknown IRI kind: {kind!r}")
    return Iri(f"{V.RESOURCE_BASE}{slug}/{quote(local_id, safe='')}")


def format_double(x: float) -> str:
    """Shortest round-trip decimal rendering for xsd:double."""
    return repr(float(x))


def double(x: float) -> Literal:
    return Literal(format_double(x), V.XSD_DOUBLE)


def check_unit_interval(x: float | None, what: str) -> None:
    if x is None:
        return
    if isinstance(x, bool) or not isinstance(x, (int, float)) or math.isnan(x) or not 0.0 <= x <= 1.0:
        raise ValidationError(f"{what} must be a real number in [0, 1], got {x!r}")


@dataclass(frozen=True)
class ConceptEntity:
    kind: ConceptKind
    local_id: str
    name: str | None = None
    linkouts: tuple[Iri, ...] = ()
    attributes: tuple[tuple[Iri, Literal], ...] = ()

    def __post_init__(self):
        if not self.local_id:
            raise ValidationError(f"{self.kind.name} concept needs a non-empty local_id")
        object.__setattr__(self, "linkouts", tuple(self.linkouts))
        object.__setattr__(self, "attributes", tuple(self.attributes))

    @property
    def iri(self) -> Iri:
        return mint_iri(self.kind, self.local_id)


@dataclass(frozen=True)
class AssociationRecord:
    kind: AssociationKind
    source: ConceptEntity
    target: ConceptEntity
    local_id: str
    score: float | None = None

    def __post_init__(self):
        if not self.local_id:
            raise ValidationError("association local_id must be non-empty")
        if not self.kind.accepts(self.source.kind, self.target.kind):
            expected = " and ".join(k.name for k in self.kind.endpoints)
            raise ValidationError(
                f"{self.kind.name} links {expected}, got "
                f"{self.source.kind.name} and {self.target.kind.name}"
            )
        if self.source.iri == self.target.iri:
            raise ValidationError(f"{self.kind.name} endpoints must be distinct")
        check_unit_interval(self.score, "association score")

    @property
    def iri(self) -> Iri:
        return mint_iri(self.kind, self.local_id)

    @property
    def score_iri(self) -> Iri:
        return mint_iri("score", f"{self.kind.slug}/{self.local_id}")


def concept_to_triples(c: ConceptEntity) -> list[Triple]:
    node = c.iri
    out = [Triple(node, V.RDF_TYPE, c.kind.class_iri)]
    if c.name:
        out.append(Triple(node, V.RDFS_LABEL, Literal(c.name)))
    for prop, value in c.attributes:
        out.append(Triple(node, prop, value))
    for link in c.linkouts:
        out.append(Triple(node, V.RDFS_SEEALSO, link))
    return out


def association_to_triples(a: AssociationRecord) -> list[Triple]:
    node = a.iri
    out = [
        Triple(node, V.RDF_TYPE, a.kind.class_iri),
        Triple(node, V.REFERS_TO, a.source.iri),
        Triple(node, V.REFERS_TO, a.target.iri),
    ]
    if a.score is not None:
        score = a.score_iri
        out += [
            Triple(node, V.HAS_MEASUREMENT_VALUE, score),
            Triple(score, V.RDF_TYPE, V.SCORE),
            Triple(score, V.HAS_VALUE, double(a.score)),
        ]
    return out
