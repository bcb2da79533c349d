from eboca.schema.axioms import emit_ontology_axioms
from eboca.schema.model import (
    AssociationKind,
    AssociationRecord,
    ConceptEntity,
    ConceptKind,
    ValidationError,
    association_to_triples,
    concept_to_triples,
    mint_iri,
)
from eboca.schema.vocab import CATALOG, NAMESPACES, TURTLE_PREFIXES, VocabTerm, catalog_table

__all__ = [
    "AssociationKind",
    "AssociationRecord",
    "CATALOG",
    "ConceptEntity",
    "ConceptKind",
    "NAMESPACES",
    "TURTLE_PREFIXES",
    "ValidationError",
    "VocabTerm",
    "association_to_triples",
    "catalog_table",
    "concept_to_triples",
    "emit_ontology_axioms",
    "mint_iri",
]
