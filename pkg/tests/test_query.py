import datetime as dt
import json
import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from eboca.evidence import annotate, paragraph_from_dict
from eboca.query import (
    CATALOG,
    Filter,
    Query,
    QueryError,
    TriplePattern,
    Var,
    parse_query,
    run_cq,
    solve,
)
from eboca.rdf import Graph, Iri, Literal, Triple
from eboca.schema import vocab as V
from oracles import enumerate_oracle, pruned_enumeration_oracle, scan_join_oracle
from strategies import small_triples

EX = "http://example.org/"
SEM_DISNET = [k for k, cq in CATALOG.items() if cq.module == "sem-disnet"]
EVIDENCE = [k for k, cq in CATALOG.items() if cq.module == "evidences"]


def rows(bs):
    return set(bs.keys())


def test_catalog_shape():
    assert SEM_DISNET == [f"cq{i:02d}" for i in range(1, 16)]
    assert EVIDENCE == [f"eboca-ev{i}" for i in range(1, 8)]
    assert all(cq.intent.endswith("?") for cq in CATALOG.values())


def test_all_variable_pattern():
    g = Graph([Triple(Iri(EX + f"s{i}"), Iri(EX + "p"), Literal(str(i))) for i in range(3)])
    assert len(solve(g, parse_query("SELECT *\n?s ?p ?o ."))) == 3


def test_disease_gene_pattern_pair(fixture_kg):
    q = parse_query("SELECT ?a ?g\n?a a sio:SIO_000983 .\n?a sio:SIO_000628 ?g .\n?g a ncit:C16612 .")
    result = solve(fixture_kg, q)
    assert len(result) == 9
    assert rows(result) == enumerate_oracle(
        [t for t in fixture_kg if t.predicate in (V.RDF_TYPE, V.REFERS_TO)
         and (t.subject.value.startswith("https://w3id.org/eboca/resource/disease-gene/")
              or t.subject.value.startswith("https://w3id.org/eboca/resource/gene/"))],
        q,
    )


def test_filter_above_bound_is_empty(fixture_kg):
    q = parse_query("SELECT ?s ?v\n?s sio:SIO_000300 ?v .\nFILTER ?v > 1.0")
    assert len(solve(fixture_kg, q)) == 0
    q = parse_query("SELECT ?s ?v\n?s sio:SIO_000300 ?v .\nFILTER ?v < 1.0")
    assert len(solve(fixture_kg, q)) > 0


def test_incomparable_filter_drops_row():
    g = Graph([
        Triple(Iri(EX + "a"), Iri(EX + "p"), Iri(EX + "x")),
        Triple(Iri(EX + "b"), Iri(EX + "p"), Literal("0.3", V.XSD_DOUBLE)),
        Triple(Iri(EX + "c"), Iri(EX + "p"), Literal("text")),
    ])
    q = parse_query(f"SELECT ?s\n?s <{EX}p> ?o .\nFILTER ?o < 0.5")
    assert [r["s"] for r in solve(g, q)] == [Iri(EX + "b")]
    q = parse_query(f"SELECT ?s\n?s <{EX}p> ?o .\nFILTER ?o != <{EX}x>")
    assert len(solve(g, q)) == 2
    q = parse_query(f'SELECT ?s\n?s <{EX}p> ?o .\nFILTER ?o regex "^TE" "i"')
    assert [r["s"] for r in solve(g, q)] == [Iri(EX + "c")]


def test_parse_errors():
    with pytest.raises(QueryError, match="no SELECT"):
        parse_query("?s ?p ?o .")
    with pytest.raises(QueryError, match=r"\?x appears in no pattern"):
        parse_query("SELECT ?x\n?s ?p ?o .")
    with pytest.raises(QueryError, match="line 2"):
        parse_query("SELECT *\n?s ?p .")
    with pytest.raises(QueryError):
        parse_query("SELECT *\n?s nope:x ?o .")
    with pytest.raises(QueryError):
        parse_query("SELECT *\n?s ?p ?o .\nFILTER ?o ~ 3")
    with pytest.raises(QueryError):
        Var("bad-name")


def test_result_formats(fixture_kg):
    result = run_cq(fixture_kg, "cq01")
    tsv = result.to_tsv().splitlines()
    assert tsv[0] == "\t".join("?" + v for v in result.variables)
    assert len(tsv) == len(result) + 1
    data = json.loads(result.to_json())
    assert data["variables"] == result.variables and len(data["rows"]) == len(result)
    assert tsv[1:] == sorted(tsv[1:])


def test_unknown_cq():
    with pytest.raises(QueryError, match="unknown competency question"):
        run_cq(Graph(), "cq99")


@pytest.mark.parametrize("cq", list(CATALOG))
def test_every_cq_on_empty_graph(cq):
    assert len(run_cq(Graph(), cq)) == 0


@pytest.mark.parametrize("cq", SEM_DISNET)
def test_sem_disnet_cq_matches_oracle(cq, fixture_kg):
    result = run_cq(fixture_kg, cq)
    assert len(result) > 0
    assert rows(result) == scan_join_oracle(fixture_kg, CATALOG[cq].query)
    assert rows(result) == pruned_enumeration_oracle(fixture_kg, CATALOG[cq].query)


@pytest.mark.parametrize("cq", EVIDENCE)
def test_evidence_cq_matches_oracle(cq, ner_graph):
    result = run_cq(ner_graph, cq)
    assert rows(result) == scan_join_oracle(ner_graph, CATALOG[cq].query)
    assert (len(result) == 0) is (cq == "eboca-ev7")


def test_ev7_after_adding_confidence(ner_paragraphs):
    extra = paragraph_from_dict({
        "paragraph_id": "conf-1", "text": "Remdesivir shortened recovery in COVID-19.",
        "extracted_on": "2022-06-01",
        "expression": {"expression_id": "conf-paper"},
        "entities": [
            {"surface": "remdesivir", "normalized_id": "CHEBI:145994", "kind": "Drug", "confidence": 0.93},
            {"surface": "COVID-19", "normalized_id": "MESH:D000086382", "kind": "Disease", "confidence": 0.88},
        ],
        "extractor": {"name": "BioNER+BioNEN", "version": "1.0"},
    })
    g = annotate(list(ner_paragraphs) + [extra], created_on=dt.date(2022, 5, 1)).graph
    result = run_cq(g, "eboca-ev7")
    assert len(result) == 1
    assert result.rows[0]["confidence"] == Literal("0.88", V.XSD_DOUBLE)


# --- properties --------------------------------------------------------------------------

VARS = [Var(n) for n in ("a", "b", "c")]
NODES = [Iri(f"http://ex.org/n{i}") for i in range(6)]
PREDS = [Iri(f"http://ex.org/p{i}") for i in range(3)]


def slot(kinds):
    return st.one_of(st.sampled_from(VARS), st.sampled_from(kinds))


patterns = st.builds(TriplePattern, slot(NODES), slot(PREDS), slot(NODES + [Literal("1", V.XSD_DOUBLE)]))


@st.composite
def queries(draw):
    pats = draw(st.lists(patterns, min_size=1, max_size=4))
    names = sorted({v for p in pats for v in p.variables()})
    if not names:
        pats.append(TriplePattern(VARS[0], PREDS[0], VARS[1]))
        names = ["a", "b"]
    select = draw(st.lists(st.sampled_from(names), min_size=1, unique=True))
    filters = []
    if draw(st.booleans()):
        var = draw(st.sampled_from(names))
        op = draw(st.sampled_from(["=", "!=", "<", ">"]))
        value = draw(st.one_of(st.sampled_from(NODES), st.sampled_from([0.5, 1.0, 2.0])))
        filters.append(Filter(var, op, value))
    return Query(select, pats, filters)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(small_triples(), max_size=40), queries())
def test_solve_equals_enumeration(ts, q):
    g = Graph(ts)
    assert rows(solve(g, q)) == enumerate_oracle(g, q)


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(small_triples(), max_size=40), queries())
def test_pruned_oracle_agrees_with_plain_enumeration(ts, q):
    assert pruned_enumeration_oracle(ts, q) == enumerate_oracle(ts, q)


@settings(max_examples=100, deadline=None)
@given(st.lists(small_triples(), max_size=40), queries(), st.randoms(use_true_random=False))
def test_pattern_order_does_not_matter(ts, q, rnd):
    g = Graph(ts)
    pats = list(q.patterns)
    rnd.shuffle(pats)
    q2 = Query(q.select, pats, q.filters)
    assert solve(g, q).keys() == solve(g, q2).keys()


@settings(max_examples=100, deadline=None)
@given(st.lists(small_triples(), max_size=30), st.lists(small_triples(), max_size=10), queries())
def test_adding_triples_keeps_rows(ts, more, q):
    q = Query(q.select, q.patterns, [])
    before = rows(solve(Graph(ts), q))
    assert before <= rows(solve(Graph(ts + more), q))


def test_fixture_scale_oracle_sample(fixture_kg):
    """Random 4-pattern star and chain queries over the fixture KG."""
    rng = random.Random(5)
    preds = sorted({t.predicate for t in fixture_kg}, key=lambda p: p.n3())
    for _ in range(25):
        chosen = [rng.choice(preds) for _ in range(3)]
        text = "SELECT *\n" + "\n".join(
            f"?x{i} {p.n3()} ?x{i + 1} ." for i, p in enumerate(chosen)
        )
        q = parse_query(text)
        assert rows(solve(fixture_kg, q)) == scan_join_oracle(fixture_kg, q)
