from __future__ import annotations

from eboca.rdf.graph import Graph
from eboca.rdf.terms import Literal, Triple
from eboca.schema import vocab as V
from eboca.schema.model import AssociationKind

# (class, superclasses, label, comment)
CREATED_CLASSES = [
    (V.PHENOTYPE, [], "Phenotype",
     "Observable characteristic or symptom associated with a disease."),
    (V.DISEASE_PHENOTYPE_ASSOCIATION, [V.ASSOCIATION], "Disease-phenotype association",
     "Association between a disease and a phenotype, as gathered by text mining."),
    (V.DRUG_DISEASE_MARKER, [V.CHEMICAL_DISEASE_ASSOCIATION], "Drug-disease marker",
     "Drug-disease association where the chemical correlates with the disease."),
    (V.DRUG_DISEASE_THERAPEUTIC, [V.CHEMICAL_DISEASE_ASSOCIATION], "Drug-disease therapeutic",
     "Drug-disease association where the drug is used to treat the disease."),
    (V.DRUG_DISEASE_INFERRED, [V.CHEMICAL_DISEASE_ASSOCIATION], "Drug-disease inferred",
     "Drug-disease association that has been inferred rather than curated."),
    (V.DRUG_TARGET_ASSOCIATION, [V.MECHANISM, V.ASSOCIATION], "Drug-target association",
     "Mechanism of action of a drug when it addresses a target."),
    (V.DISEASE_VARIANT_ASSOCIATION, [V.ASSOCIATION], "Disease-variant association",
     "Scored association between a disease and a genetic variant."),
    (V.GENE_VARIANT_ASSOCIATION, [V.ASSOCIATION], "Gene-variant association",
     "Association between a gene and one of its genetic variants."),
    (V.GENE_PATHWAY_ASSOCIATION, [V.ASSOCIATION], "Gene-pathway association",
     "Participation of a gene in a biological pathway."),
    (V.DISEASE_NCRNA_ASSOCIATION, [V.ASSOCIATION], "Disease-ncRNA association",
     "Association between a disease and a non-coding RNA."),
    (V.EVIDENCE, [], "Evidence",
     "Evidence supporting an association, with its provenance and metadata."),
]

# (property, kind, superproperties, domain, range, label, comment)
CREATED_PROPERTIES = [
    (V.DRUG_FOR_MECHANISM, V.OWL_OBJECT_PROPERTY, [V.HAS_MECHANISM, V.IS_REFERRED_TO_BY],
     V.DRUG, V.DRUG_TARGET_ASSOCIATION, "drug for mechanism",
     "Links a drug to the drug-target association describing its mechanism of action."),
    (V.REFERS_TO_PHENOTYPE, V.OWL_OBJECT_PROPERTY, [V.REFERS_TO],
     V.DISEASE_PHENOTYPE_ASSOCIATION, V.PHENOTYPE, "refers to phenotype",
     "Links a disease-phenotype association to its phenotype."),
    (V.IN_SECTION, V.OWL_DATATYPE_PROPERTY, [],
     V.PARAGRAPH, V.XSD_STRING, "in section",
     "Name of the document section a paragraph belongs to."),
    (V.HAS_CONFIDENCE, V.OWL_DATATYPE_PROPERTY, [],
     V.EVIDENCE, V.XSD_DOUBLE, "has confidence",
     "Confidence in [0, 1] reported by the method that produced the evidence."),
]

# reused classes that are associations but not declared as such by their source ontology
REUSED_ASSOCIATION_PARENTS = [
    (V.CHEMICAL_DISEASE_ASSOCIATION, V.ASSOCIATION),
    (V.DISEASE_GENE_ASSOCIATION, V.ASSOCIATION),
    (V.DRUG_DRUG_INTERACTION, V.ASSOCIATION),
    (V.DRUG_INDICATION, V.ASSOCIATION),
    (V.SIDE_EFFECT, V.ASSOCIATION),
    (V.PPI, V.ASSOCIATION),
    (V.ORPHANET_CLASSIFICATION, V.ASSOCIATION),
]


def emit_ontology_axioms() -> Graph:
    g = Graph()
    for cls, parents, label, comment in CREATED_CLASSES:
        g.add(Triple(cls, V.RDF_TYPE, V.OWL_CLASS))
        g.add(Triple(cls, V.RDFS_LABEL, Literal(label, language="en")))
        g.add(Triple(cls, V.RDFS_COMMENT, Literal(comment, language="en")))
        for parent in parents:
            g.add(Triple(cls, V.RDFS_SUBCLASSOF, parent))
    for prop, kind, supers, domain, range_, label, comment in CREATED_PROPERTIES:
        g.add(Triple(prop, V.RDF_TYPE, kind))
        g.add(Triple(prop, V.RDFS_LABEL, Literal(label, language="en")))
        g.add(Triple(prop, V.RDFS_COMMENT, Literal(comment, language="en")))
        g.add(Triple(prop, V.RDFS_DOMAIN, domain))
        g.add(Triple(prop, V.RDFS_RANGE, range_))
        for sup in supers:
            g.add(Triple(prop, V.RDFS_SUBPROPERTYOF, sup))
    for child, parent in REUSED_ASSOCIATION_PARENTS:
        g.add(Triple(child, V.RDFS_SUBCLASSOF, parent))
    missing = [k for k in AssociationKind if not _reaches_association(g, k.class_iri)]
    assert not missing, f"association kinds outside the hierarchy: {missing}"
    return g


def _reaches_association(g: Graph, cls) -> bool:
    seen, todo = set(), [cls]
    while todo:
        c = todo.pop()
        if c == V.ASSOCIATION:
            return True
        if c in seen:
            continue
        seen.add(c)
        todo.extend(t.object for t in g.match(c, V.RDFS_SUBCLASSOF, None))
    return False
