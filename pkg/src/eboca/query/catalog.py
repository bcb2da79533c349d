"""Bundled competency questions.

The sem-disnet questions (cq01-cq15) target the materialized DISNET subset;
the evidence questions (eboca-ev1 to eboca-ev7) target annotated text
extractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from eboca.rdf.graph import Graph
from eboca.query.engine import BindingSet, Query, QueryError, parse_query, solve


@dataclass(frozen=True)
class CompetencyQuestion:
    id: str
    module: str
    intent: str
    text: str

    @property
    def query(self) -> Query:
        return _parsed(self.id)


_DG_SCORE = """
?a a sio:SIO_000983 .
?a sio:SIO_000628 ?disease .
?disease a ncit:C7057 .
?a sio:SIO_000628 ?gene .
?gene a ncit:C16612 .
?a sio:SIO_000216 ?s .
?s a ncit:C25338 .
?s sio:SIO_000300 ?score .
"""


def _drug_disease(cls: str) -> str:
    return f"""SELECT ?drug ?drugName ?disease ?diseaseName
?a a eboca-sd:{cls} .
?a sio:SIO_000628 ?drug .
?drug a cco:Drug .
?drug rdfs:label ?drugName .
?a sio:SIO_000628 ?disease .
?disease a ncit:C7057 .
?disease rdfs:label ?diseaseName .
"""


_CQS = [
    ("cq01", "sem-disnet", "Which diseases are described, and what are their names?", """
SELECT ?disease ?name
?disease a ncit:C7057 .
?disease rdfs:label ?name .
"""),
    ("cq02", "sem-disnet", "Which genes are associated with diabetes mellitus (UMLS C0011849)?", """
SELECT ?gene ?symbol
?a a sio:SIO_000983 .
?a sio:SIO_000628 res:disease/C0011849 .
?a sio:SIO_000628 ?gene .
?gene a ncit:C16612 .
?gene rdfs:label ?symbol .
"""),
    ("cq03", "sem-disnet", "What is the score of each disease-gene association?",
     "SELECT ?disease ?gene ?score\n" + _DG_SCORE),
    ("cq04", "sem-disnet", "Which disease-gene associations have a score above 0.5?",
     "SELECT ?disease ?gene ?score\n" + _DG_SCORE + "FILTER ?score > 0.5\n"),
    ("cq05", "sem-disnet", "Which genetic variants are associated with each disease, and with which score?", """
SELECT ?disease ?variant ?score
?a a eboca-sd:DiseaseVariantAssociation .
?a sio:SIO_000628 ?disease .
?disease a ncit:C7057 .
?a sio:SIO_000628 ?variant .
?variant a obo:SO_0001060 .
?a sio:SIO_000216 ?s .
?s sio:SIO_000300 ?score .
"""),
    ("cq06", "sem-disnet", "Which genetic variants does each gene have?", """
SELECT ?gene ?symbol ?variant
?a a eboca-sd:GeneVariantAssociation .
?a sio:SIO_000628 ?gene .
?gene a ncit:C16612 .
?gene rdfs:label ?symbol .
?a sio:SIO_000628 ?variant .
?variant a obo:SO_0001060 .
"""),
    ("cq07", "sem-disnet", "Which genes take part in a signaling pathway?", """
SELECT ?gene ?pathway ?name
?a a eboca-sd:GenePathwayAssociation .
?a sio:SIO_000628 ?gene .
?gene a ncit:C16612 .
?a sio:SIO_000628 ?pathway .
?pathway a wp:Pathway .
?pathway rdfs:label ?name .
FILTER ?name regex "signaling" i
"""),
    ("cq08", "sem-disnet", "Which drugs are used to treat each disease?", _drug_disease("DrugDiseaseTherapeutic")),
    ("cq09", "sem-disnet", "Which drugs act as markers of a disease?", _drug_disease("DrugDiseaseMarker")),
    ("cq10", "sem-disnet", "Which drug-disease associations have been inferred?", _drug_disease("DrugDiseaseInferred")),
    ("cq11", "sem-disnet", "Which drugs interact with hydroxychloroquine (CHEMBL1535)?", """
SELECT ?drug ?name
?a a sio:SIO_001006 .
?a sio:SIO_000628 res:drug/CHEMBL1535 .
?a sio:SIO_000628 ?drug .
?drug rdfs:label ?name .
FILTER ?drug != res:drug/CHEMBL1535
"""),
    ("cq12", "sem-disnet", "Which drugs associated with COVID-19 take part in a drug-drug interaction?", """
SELECT ?drug ?name ?interaction
?a sio:SIO_000628 res:disease/C5203670 .
?a sio:SIO_000628 ?drug .
?drug a cco:Drug .
?drug rdfs:label ?name .
?interaction a sio:SIO_001006 .
?interaction sio:SIO_000628 ?drug .
"""),
    ("cq13", "sem-disnet", "Which external sources does each disease link out to?", """
SELECT ?disease ?link
?disease a ncit:C7057 .
?disease rdfs:seeAlso ?link .
"""),
    ("cq14", "sem-disnet", "Which genes are related to a disease through a shared genetic variant?", """
SELECT ?disease ?variant ?gene
?dv a eboca-sd:DiseaseVariantAssociation .
?dv sio:SIO_000628 ?disease .
?disease a ncit:C7057 .
?dv sio:SIO_000628 ?variant .
?variant a obo:SO_0001060 .
?gv a eboca-sd:GeneVariantAssociation .
?gv sio:SIO_000628 ?variant .
?gv sio:SIO_000628 ?gene .
?gene a ncit:C16612 .
"""),
    ("cq15", "sem-disnet", "Which pathways are related to a disease through its associated genes?", """
SELECT ?disease ?gene ?pathway ?name
?dg a sio:SIO_000983 .
?dg sio:SIO_000628 ?disease .
?disease a ncit:C7057 .
?dg sio:SIO_000628 ?gene .
?gene a ncit:C16612 .
?gp a eboca-sd:GenePathwayAssociation .
?gp sio:SIO_000628 ?gene .
?gp sio:SIO_000628 ?pathway .
?pathway a wp:Pathway .
?pathway rdfs:label ?name .
"""),
    ("eboca-ev1", "evidences", "Which kind of evidence supports each association?", """
SELECT ?association ?evidence ?kind
?association sio:SIO_000772 ?evidence .
?evidence a eboca-ev:Evidence .
?evidence a ?kind .
FILTER ?kind != eboca-ev:Evidence
"""),
    ("eboca-ev2", "evidences", "From which paragraph was each evidence derived, and what is its text?", """
SELECT ?evidence ?paragraph ?text
?evidence a eboca-ev:Evidence .
?evidence pav:derivedFrom ?paragraph .
?paragraph a doco:Paragraph .
?paragraph c4o:hasContent ?text .
"""),
    ("eboca-ev3", "evidences", "Which publication contains the paragraph each evidence comes from?", """
SELECT ?evidence ?expression ?title
?evidence pav:derivedFrom ?paragraph .
?paragraph a doco:Paragraph .
?paragraph dct:isPartOf ?expression .
?expression a fabio:Expression .
?expression dct:title ?title .
"""),
    ("eboca-ev4", "evidences", "Which software, in which version, produced each evidence?", """
SELECT ?evidence ?software ?version
?evidence a eboca-ev:Evidence .
?evidence pav:createdWith ?sw .
?sw rdfs:label ?software .
?sw pav:version ?version .
"""),
    ("eboca-ev5", "evidences", "Which agent is responsible for each evidence?", """
SELECT ?evidence ?agent
?evidence a eboca-ev:Evidence .
?evidence pav:createdBy ?a .
?a foaf:name ?agent .
"""),
    ("eboca-ev6", "evidences", "When was each evidence created, and in which version?", """
SELECT ?evidence ?created ?version
?evidence a eboca-ev:Evidence .
?evidence pav:createdOn ?created .
?evidence pav:version ?version .
"""),
    ("eboca-ev7", "evidences", "Which confidence score does each evidence have?", """
SELECT ?evidence ?confidence
?evidence a eboca-ev:Evidence .
?evidence eboca-ev:hasConfidence ?confidence .
"""),
]

CATALOG: dict[str, CompetencyQuestion] = {
    cq_id: CompetencyQuestion(cq_id, module, intent, text.strip() + "\n")
    for cq_id, module, intent, text in _CQS
}


@lru_cache(maxsize=None)
def _parsed(cq_id: str) -> Query:
    return parse_query(CATALOG[cq_id].text)


def run_cq(g: Graph, cq_id: str) -> BindingSet:
    if cq_id not in CATALOG:
        raise QueryError(f"unknown competency question {cq_id!r}; known: {', '.join(CATALOG)}")
    return solve(g, _parsed(cq_id))
