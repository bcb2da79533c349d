import random
import threading

import pytest
import rdflib
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from eboca.rdf import (
    BlankNode,
    FrozenGraphError,
    Graph,
    Iri,
    Literal,
    NTriplesError,
    TermError,
    Triple,
    parse_ntriples,
    parse_turtle,
    serialize_ntriples,
    serialize_turtle,
    triple,
)
from eboca.schema import TURTLE_PREFIXES, emit_ontology_axioms
from strategies import graphs_of, small_triples

EX = "http://example.org/"
RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
DISEASE = Iri("http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C7057")


def t(s, p, o):
    return Triple(Iri(EX + s), Iri(EX + p), o if not isinstance(o, str) else Iri(EX + o))


# --- terms ---------------------------------------------------------------------

@pytest.mark.parametrize("value", ["", "no-scheme", "http://a b", "http://a\tb", "1http://x", ":x"])
def test_iri_rejects(value):
    with pytest.raises(TermError):
        Iri(value)


def test_iri_accepts_reused_vocabulary_names():
    assert Iri("http://bio2rdf.org/ctd_vocabulary:Chemical-Disease-Association").value.endswith("Association")


def test_literal_language_invariants():
    lit = Literal("x", language="EN-gb")
    assert lit.language == "en-gb"
    assert lit.datatype.value.endswith("#langString")
    with pytest.raises(TermError):
        Literal("x", datatype="http://www.w3.org/1999/02/22-rdf-syntax-ns#langString")
    with pytest.raises(TermError):
        Literal("x", datatype="http://www.w3.org/2001/XMLSchema#string", language="en")


def test_plain_literal_is_xsd_string():
    assert Literal("a") == Literal("a", "http://www.w3.org/2001/XMLSchema#string")
    assert Literal("a").n3() == '"a"'


@pytest.mark.parametrize("label", ["", "a-b", "a b", "é"])
def test_blank_node_label(label):
    with pytest.raises(TermError):
        BlankNode(label)


def test_triple_position_checks():
    with pytest.raises(TermError):
        triple(Literal("x"), Iri(EX + "p"), Iri(EX + "o"))
    with pytest.raises(TermError):
        triple(Iri(EX + "s"), BlankNode("b"), Iri(EX + "o"))
    with pytest.raises(TermError):
        Graph().add((Literal("x"), Iri(EX + "p"), Iri(EX + "o")))


# --- graph -----------------------------------------------------------------------

def test_insert_semantics():
    g = Graph()
    assert g.add(t("s", "p", "o"))
    assert len(g) == 1
    assert not g.add(t("s", "p", "o"))
    assert len(g) == 1
    g.add(t("s", "p", Literal("a")))
    g.add(t("s", "p", Literal("b")))
    assert len(g) == 3


def test_match_examples(fixture_kg):
    assert fixture_kg.match() == set(fixture_kg)
    scan = {x for x in fixture_kg if x.predicate == RDF_TYPE and x.object == DISEASE}
    assert scan and fixture_kg.match(None, RDF_TYPE, DISEASE) == scan
    assert fixture_kg.match(Iri(EX + "absent"), None, None) == set()


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.booleans(), small_triples()), max_size=60))
def test_index_coherence(ops):
    g, ref = Graph(), set()
    for is_add, tr in ops:
        # interleave single inserts with bulk updates
        if is_add:
            g.add(tr)
        else:
            g.update([tr])
        ref.add(tr)
        terms = {x for tt in ref for x in tt}
        for term in terms:
            assert g.match(term, None, None) == {x for x in ref if x[0] == term}
            assert g.match(None, term, None) == {x for x in ref if x[1] == term}
            assert g.match(None, None, term) == {x for x in ref if x[2] == term}
        assert len(g) == len(ref)
    if ref:
        s, p, o = random.choice(sorted(ref, key=lambda x: x.n3()))
        assert g.match(s, p, None) == {x for x in ref if x[0] == s and x[1] == p}
        assert g.match(None, p, o) == {x for x in ref if x[1] == p and x[2] == o}
        assert g.match(s, p, o) == {(s, p, o)}


def test_frozen_graph_rejects_writes_and_shares_reads(fixture_kg):
    g = Graph(fixture_kg).freeze()
    with pytest.raises(FrozenGraphError):
        g.add(t("s", "p", "o"))
    expected = g.match(None, RDF_TYPE, None)
    results = []

    def reader():
        results.append(g.match(None, RDF_TYPE, None) == expected)

    threads = [threading.Thread(target=reader) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert results == [True] * 8


# --- N-Triples -------------------------------------------------------------------

def test_empty_graph_serializes_to_empty_document():
    assert serialize_ntriples(Graph()) == b""


def test_insertion_order_does_not_change_bytes(fixture_kg):
    ts = list(fixture_kg)
    random.Random(7).shuffle(ts)
    assert serialize_ntriples(Graph(ts)) == serialize_ntriples(fixture_kg)


def test_escaping_and_reference_parser():
    lexical = 'line one\nsays "hi"\tand \\ back\x01   café'
    g = Graph([t("s", "p", Literal(lexical)), t("s", "p", Literal("x", language="en"))])
    doc = serialize_ntriples(g)
    assert b'\\n' in doc and b'\\"' in doc
    ref = rdflib.Graph().parse(data=doc.decode("utf-8"), format="nt")
    values = {str(o) for _, _, o in ref}
    assert lexical in values
    assert parse_ntriples(doc) == g


def _rdflib_key(term):
    if isinstance(term, rdflib.URIRef):
        return ("iri", str(term))
    if isinstance(term, rdflib.BNode):
        return ("bnode", str(term))
    if term.language:
        return ("lit", str(term), None, term.language.lower())
    dt = str(term.datatype) if term.datatype else "http://www.w3.org/2001/XMLSchema#string"
    return ("lit", str(term), dt, None)


def _own_key(term):
    if isinstance(term, Iri):
        return ("iri", term.value)
    if isinstance(term, BlankNode):
        return ("bnode", term.label)
    if term.language:
        return ("lit", term.lexical, None, term.language)
    return ("lit", term.lexical, term.datatype.value, None)


def _rdflib_set(g):
    return {tuple(_rdflib_key(x) for x in tr) for tr in g}


def _own_set(g):
    return {tuple(_own_key(x) for x in tr) for tr in g}


def test_fixture_through_reference_ntriples_parser(merged_kg):
    doc = serialize_ntriples(merged_kg).decode("utf-8")
    assert _rdflib_set(rdflib.Graph().parse(data=doc, format="nt")) == _own_set(merged_kg)


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(graphs_of(max_size=40, safe=True, bnodes=False))
def test_random_graphs_through_reference_parser(ts):
    g = Graph(ts)
    doc = serialize_ntriples(g).decode("utf-8")
    assert _rdflib_set(rdflib.Graph().parse(data=doc, format="nt")) == _own_set(g)


def test_reference_parser_output_is_read_back():
    ref = rdflib.Graph()
    ref.add((rdflib.URIRef(EX + "s"), rdflib.URIRef(EX + "p"), rdflib.Literal("tab\there", lang="en")))
    ref.add((rdflib.URIRef(EX + "s"), rdflib.URIRef(EX + "q"), rdflib.Literal(5)))
    g = parse_ntriples(ref.serialize(format="nt").encode("utf-8"))
    assert _own_set(g) == _rdflib_set(ref)


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(graphs_of(max_size=200))
def test_round_trip(ts):
    g = Graph(ts)
    doc = serialize_ntriples(g)
    back = parse_ntriples(doc)
    assert back == g
    assert serialize_ntriples(back) == doc


def test_missing_dot_names_line():
    doc = f"<{EX}s> <{EX}p> <{EX}o> .\n<{EX}s> <{EX}p> <{EX}o2>\n"
    with pytest.raises(NTriplesError) as err:
        parse_ntriples(doc)
    assert err.value.line == 2
    assert "line 2" in str(err.value)


@pytest.mark.parametrize("line, token", [
    ('"lit" <http://e/p> <http://e/o> .', '"lit"'),
    ("<http://e/s> <http://e/p> <rel> .", "<rel>"),
    ("<http://e/s> _:b <http://e/o> .", "_:b"),
    ('<http://e/s> <http://e/p> "bad\\q" .', '"bad\\q"'),
])
def test_syntax_errors_report_token(line, token):
    with pytest.raises(NTriplesError) as err:
        parse_ntriples("\n" + line + "\n")
    assert err.value.line == 2
    assert err.value.token.startswith(token[:4])


def test_duplicate_lines_collapse_and_comments_skip():
    line = f"<{EX}s> <{EX}p> \"v\" ."
    g = parse_ntriples(f"# header\n{line}\n\n  {line}   # again\r\n")
    assert len(g) == 1


def test_unicode_line_separator_in_literal_is_not_a_line_break():
    doc = f'<{EX}s> <{EX}p> "a b" .\n'
    (tr,) = parse_ntriples(doc)
    assert tr.object.lexical == "a b"


def test_iri_special_characters_round_trip():
    g = Graph([Triple(Iri(EX + 'a{b}|c^"d`'), Iri(EX + "p"), Iri(EX + "o\\"))])
    doc = serialize_ntriples(g)
    assert b"\\u007B" in doc
    assert parse_ntriples(doc) == g


# --- Turtle ------------------------------------------------------------------------

def test_turtle_prefix_compaction():
    g = Graph([Triple(Iri(EX + "d1"), RDF_TYPE, DISEASE)])
    out = serialize_turtle(g, {"ncit": "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#"}).decode()
    assert "@prefix ncit: <http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#> ." in out
    assert "ncit:C7057" in out


def test_turtle_without_prefixes_uses_brackets():
    g = Graph([Triple(Iri(EX + "d1"), Iri(EX + "p"), DISEASE)])
    out = serialize_turtle(g, {}).decode()
    assert "@prefix" not in out
    assert f"<{DISEASE.value}>" in out and f"<{EX}d1>" in out


def test_turtle_reference_parser(merged_kg):
    doc = serialize_turtle(merged_kg, TURTLE_PREFIXES).decode("utf-8")
    assert _rdflib_set(rdflib.Graph().parse(data=doc, format="turtle")) == _own_set(merged_kg)


def test_turtle_axioms_reference_parser_and_own_reader():
    g = emit_ontology_axioms()
    doc = serialize_turtle(g, TURTLE_PREFIXES)
    assert _rdflib_set(rdflib.Graph().parse(data=doc.decode(), format="turtle")) == _own_set(g)
    assert parse_turtle(doc) == g


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(graphs_of(max_size=30))
def test_turtle_own_reader_round_trip(ts):
    g = Graph(ts)
    assert parse_turtle(serialize_turtle(g, {"ex": "http://", "u": "urn:"})) == g
