"""Namespaces and the catalog of every vocabulary term the emitters use."""

from __future__ import annotations

import os
from dataclasses import dataclass

from eboca.rdf.terms import Iri, TermError

NAMESPACES: dict[str, str] = {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "sio": "http://semanticscience.org/resource/",
    "ncit": "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#",
    "obo": "http://purl.obolibrary.org/obo/",
    "eco": "http://purl.obolibrary.org/obo/",
    "ordo": "http://www.orpha.net/ORDO/",
    "wp": "http://vocabularies.wikipathways.org/wp#",
    "cco": "http://rdf.ebi.ac.uk/terms/chembl#",
    "ctd": "http://bio2rdf.org/ctd_vocabulary:",
    "sct": "http://snomed.info/id/",
    "pav": "http://purl.org/pav/",
    "dct": "http://purl.org/dc/terms/",
    "foaf": "http://xmlns.com/foaf/0.1/",
    "prov": "http://www.w3.org/ns/prov#",
    "doco": "http://purl.org/spar/doco/",
    "fabio": "http://purl.org/spar/fabio/",
    "c4o": "http://purl.org/spar/c4o/",
    "eboca-sd": "https://w3id.org/eboca/sem-disnet#",
    "eboca-ev": "https://w3id.org/eboca/evidences#",
}

DEFAULT_RESOURCE_BASE = "https://w3id.org/eboca/resource/"
BASE_IRI_ENV = "EBOCA_BASE_IRI"


def _resource_base() -> str:
    base = os.environ.get(BASE_IRI_ENV) or DEFAULT_RESOURCE_BASE
    try:
        Iri(base)
    except TermError as exc:
        raise ValueError(f"{BASE_IRI_ENV} is not a usable IRI: {exc}") from None
    if not base.endswith(("/", "#")):
        raise ValueError(f"{BASE_IRI_ENV} must end with '/' or '#': {base!r}")
    return base


# Base of minted instance IRIs, read once at import time.
RESOURCE_BASE = _resource_base()
CREATED_NAMESPACES = (NAMESPACES["eboca-sd"], NAMESPACES["eboca-ev"])

# Prefix map for Turtle output; "eco" shares the obo namespace and is left out so
# compaction is unambiguous.
TURTLE_PREFIXES = {k: v for k, v in NAMESPACES.items() if k != "eco"}
TURTLE_PREFIXES["res"] = RESOURCE_BASE


@dataclass(frozen=True)
class VocabTerm:
    prefix: str
    local: str
    iri: Iri

    @property
    def curie(self) -> str:
        return f"{self.prefix}:{self.local}"


CATALOG: dict[str, VocabTerm] = {}
_BY_IRI: dict[Iri, VocabTerm] = {}


def term(curie: str) -> Iri:
    """Register (once) and return the IRI for a prefixed name."""
    found = CATALOG.get(curie)
    if found is not None:
        return found.iri
    prefix, local = curie.split(":", 1)
    iri = Iri(NAMESPACES[prefix] + local)
    if iri in _BY_IRI:
        raise ValueError(f"{curie} duplicates catalog entry {_BY_IRI[iri].curie}")
    vt = VocabTerm(prefix, local, iri)
    CATALOG[curie] = vt
    _BY_IRI[iri] = vt
    return iri


def lookup(iri: Iri) -> VocabTerm | None:
    return _BY_IRI.get(iri)


def in_created_namespace(iri: Iri) -> bool:
    return iri.value.startswith(CREATED_NAMESPACES)


# core RDF/OWL
RDF_TYPE = term("rdf:type")
RDFS_LABEL = term("rdfs:label")
RDFS_COMMENT = term("rdfs:comment")
RDFS_SUBCLASSOF = term("rdfs:subClassOf")
RDFS_SUBPROPERTYOF = term("rdfs:subPropertyOf")
RDFS_DOMAIN = term("rdfs:domain")
RDFS_RANGE = term("rdfs:range")
RDFS_SEEALSO = term("rdfs:seeAlso")
OWL_CLASS = term("owl:Class")
OWL_OBJECT_PROPERTY = term("owl:ObjectProperty")
OWL_DATATYPE_PROPERTY = term("owl:DatatypeProperty")
OWL_INVERSE_OF = term("owl:inverseOf")
XSD_STRING = term("xsd:string")
XSD_DOUBLE = term("xsd:double")
XSD_DATE = term("xsd:date")
XSD_DATETIME = term("xsd:dateTime")
XSD_ANYURI = term("xsd:anyURI")
RDF_LANGSTRING = term("rdf:langString")

# association backbone
ASSOCIATION = term("sio:SIO_000897")
SEMANTIC_TYPE = term("sio:SIO_000326")
REFERS_TO = term("sio:SIO_000628")
IS_REFERRED_TO_BY = term("sio:SIO_000212")
HAS_MEASUREMENT_VALUE = term("sio:SIO_000216")
HAS_VALUE = term("sio:SIO_000300")
HAS_EVIDENCE = term("sio:SIO_000772")
DISEASE_GENE_ASSOCIATION = term("sio:SIO_000983")
DRUG_DRUG_INTERACTION = term("sio:SIO_001006")
SCORE = term("ncit:C25338")

# concepts
DISEASE = term("ncit:C7057")
DISEASE_CLASS = term("obo:HP_0000118")
DISEASE_MARKER = term("ncit:C18329")
NCRNA = term("ncit:C26549")
ORPHANET_CLASSIFICATION = term("ordo:Orphanet_557492")
GENE = term("ncit:C16612")
PATHWAY = term("wp:Pathway")
VARIANT = term("obo:SO_0001060")
PROTEIN = term("ncit:C17021")
PROTEIN_CLASS = term("obo:PR_000000001")
PPI = term("ncit:C18469")
ORGANISM = term("ncit:C14250")
TARGET = term("cco:Target")
DRUG = term("cco:Drug")
MECHANISM = term("cco:Mechanism")
HAS_MECHANISM = term("cco:hasMechanism")
DRUG_INDICATION = term("cco:DrugIndication")
CHEMICAL_DISEASE_ASSOCIATION = term("ctd:Chemical-Disease-Association")
SIDE_EFFECT = term("sct:662014003")

# created SEM-DISNET terms
PHENOTYPE = term("eboca-sd:Phenotype")
DISEASE_PHENOTYPE_ASSOCIATION = term("eboca-sd:DiseasePhenotypeAssociation")
DRUG_DISEASE_MARKER = term("eboca-sd:DrugDiseaseMarker")
DRUG_DISEASE_THERAPEUTIC = term("eboca-sd:DrugDiseaseTherapeutic")
DRUG_DISEASE_INFERRED = term("eboca-sd:DrugDiseaseInferred")
DRUG_TARGET_ASSOCIATION = term("eboca-sd:DrugTargetAssociation")
DISEASE_VARIANT_ASSOCIATION = term("eboca-sd:DiseaseVariantAssociation")
GENE_VARIANT_ASSOCIATION = term("eboca-sd:GeneVariantAssociation")
GENE_PATHWAY_ASSOCIATION = term("eboca-sd:GenePathwayAssociation")
DISEASE_NCRNA_ASSOCIATION = term("eboca-sd:DiseaseNcRNAAssociation")
DRUG_FOR_MECHANISM = term("eboca-sd:drugForMechanism")
REFERS_TO_PHENOTYPE = term("eboca-sd:refersToPhenotype")

# evidences
EVIDENCE = term("eboca-ev:Evidence")
IN_SECTION = term("eboca-ev:inSection")
HAS_CONFIDENCE = term("eboca-ev:hasConfidence")
COMPUTATIONAL_INFERENCE = term("eco:ECO_0007672")
DOCUMENTED_STATEMENT = term("eco:ECO_0006151")
DERIVED_FROM = term("pav:derivedFrom")
CREATED_ON = term("pav:createdOn")
LAST_UPDATE_ON = term("pav:lastUpdateOn")
VERSION = term("pav:version")
CREATED_BY = term("pav:createdBy")
CREATED_WITH = term("pav:createdWith")
PARAGRAPH = term("doco:Paragraph")
EXPRESSION = term("fabio:Expression")
HAS_URL = term("fabio:hasURL")
HAS_CONTENT = term("c4o:hasContent")
IS_PART_OF = term("dct:isPartOf")
TITLE = term("dct:title")
ABSTRACT = term("dct:abstract")
IDENTIFIER = term("dct:identifier")
DESCRIPTION = term("dct:description")
CREATOR = term("dct:creator")
CREATED = term("dct:created")
MODIFIED = term("dct:modified")
AGENT = term("foaf:Agent")
FOAF_NAME = term("foaf:name")
SOFTWARE_AGENT = term("prov:SoftwareAgent")

ECO_KINDS = (COMPUTATIONAL_INFERENCE, DOCUMENTED_STATEMENT)


def catalog_table() -> str:
    """Two-column prefixed-name / IRI table, sorted by prefixed name."""
    rows = sorted(CATALOG.values(), key=lambda vt: vt.curie)
    return "".join(f"{vt.curie}\t{vt.iri.value}\n" for vt in rows)
