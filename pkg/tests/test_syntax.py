"""Data and query syntax: parsing, canonical serialisation, round trips."""

from __future__ import annotations

import random

import pytest

from anrdf import get_domain, parse_graph, parse_query
from anrdf.anql import algebra as alg
from anrdf.errors import ParseError
from anrdf.model import SC, TYPE, AnnotatedGraph, Term, Triple, iri, literal, skolem
from anrdf.syntax import (
    serialize_answers_json,
    serialize_answers_tsv,
    serialize_graph,
)
from anrdf.syntax.data import format_term

TEMPORAL = get_domain("temporal")

ALL_DOMAIN_IDS = [
    "boolean",
    "fuzzy:min",
    "fuzzy:product",
    "fuzzy:lukasiewicz",
    "temporal",
    "provenance",
    "compound(temporal,fuzzy:product)",
    "compound(temporal,provenance)",
]


def random_term(rng: random.Random) -> Term:
    roll = rng.random()
    if roll < 0.55:
        return iri(rng.choice(["alpha", "beta.v2", "rel-x", "worksFor"]))
    if roll < 0.7:
        return iri(f"http://example.org/ns#{rng.randrange(5)}")
    if roll < 0.85:
        return literal(rng.choice(["plain", 'with "quotes"', "line\nbreak", "7"]))
    return skolem(f"b{rng.randrange(4)}")


def random_document(rng: random.Random, domain) -> AnnotatedGraph:
    graph = AnnotatedGraph(domain)
    predicates = [iri("p"), iri("q"), TYPE, SC]
    for _ in range(rng.randint(0, 10)):
        s = random_term(rng)
        p = rng.choice(predicates)
        o = random_term(rng)
        payload = domain.random_payload(rng)
        value = domain.value(payload)
        if not value.is_bottom:
            graph.insert(Triple(s, p, o), value)
    return graph


class TestDataRoundTrip:
    @pytest.mark.parametrize("domain_id", ALL_DOMAIN_IDS)
    def test_generated_documents(self, domain_id):
        domain = get_domain(domain_id)
        rng = random.Random(hash(domain_id) & 0xFFFF)
        for _ in range(40):
            graph = random_document(rng, domain)
            text = serialize_graph(graph)
            doc = parse_graph(text)
            assert doc.domain.name == domain.name
            assert dict(doc.graph.statements()) == dict(graph.statements())
            assert serialize_graph(doc.graph) == text  # byte-identical

    def test_fig1_round_trip_is_byte_identical(self, data_dir):
        doc = parse_graph((data_dir / "fig1.anrdf").read_text())
        once = serialize_graph(doc.graph, doc.plain)
        again = serialize_graph(parse_graph(once).graph, parse_graph(once).plain)
        assert once == again

    def test_plain_triples_are_side_listed(self):
        doc = parse_graph("a p b .\n(c q d) : {[1,2]} .\n", domain="temporal")
        assert doc.plain == [Triple(iri("a"), iri("p"), iri("b"))]
        assert len(doc.graph) == 1

    def test_shorthands_expand_on_output(self):
        doc = parse_graph("@domix temporal .\n(a p b) : 2005 .\n(c q d) : [1,4] .\n")
        text = serialize_graph(doc.graph)
        assert "{[2005,2005]}" in text and "{[1,4]}" in text

    def test_temporal_top_serialisation(self):
        assert TEMPORAL.top.serialize() == "{[-inf,+inf]}"

    def test_prefixes_and_keywords(self):
        doc = parse_graph(
            "@domix temporal .\n"
            "@prefix : <http://ex.org/> .\n"
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
            "(:chadHurley rdf:type :youtubeEmp) : {[2005,2010]} .\n"
        )
        t = Triple(
            iri("http://ex.org/chadHurley"), TYPE, iri("http://ex.org/youtubeEmp")
        )
        assert doc.graph.get(t) is not None

    def test_skolemisation_is_deterministic(self):
        text = "@domix boolean .\n(_:b1 p _:b2) : true .\n"
        doc1, doc2 = parse_graph(text), parse_graph(text)
        assert dict(doc1.graph.statements()) == dict(doc2.graph.statements())
        t = next(iter(doc1.graph.triple_set()))
        assert t.subject == skolem("b1")
        scoped = parse_graph(text, graph_id="g1")
        assert next(iter(scoped.graph.triple_set())).subject == skolem("b1", "g1")

    def test_literal_subject_allowed(self):
        doc = parse_graph('@domix boolean .\n("42" p b) : true .\n')
        assert next(iter(doc.graph.triple_set())).subject == literal("42")

    def test_literal_predicate_rejected(self):
        with pytest.raises(ParseError):
            parse_graph('@domix boolean .\n(a "p" b) : true .\n')

    @pytest.mark.parametrize(
        "bad",
        [
            "(a p b) : {[1,2]}",  # missing dot
            "(a p) : {[1,2]} .",  # two terms
            "a p .",
            "(a p b) : nonsense .",
            "(a p b) : 1.5 .",
        ],
    )
    def test_errors_carry_positions(self, bad):
        with pytest.raises(ParseError) as info:
            parse_graph(f"@domix fuzzy:product .\n{bad}\n")
        assert info.value.line == 2

    def test_fuzzy_range_check(self):
        with pytest.raises(ParseError):
            parse_graph("@domix fuzzy:min .\n(a p b) : 1.5 .\n")

    def test_missing_domain(self):
        with pytest.raises(ParseError):
            parse_graph("(a p b) : {[1,2]} .\n")

    def test_comments_ignored(self):
        doc = parse_graph("# header\n@domix boolean .\n(a p b) : true . # tail\n")
        assert len(doc.graph) == 1

    def test_term_formatting(self):
        assert format_term(TYPE) == "type"
        assert format_term(iri("plain")) == "plain"
        assert format_term(iri("has space")) == "<has space>"
        assert format_term(iri("type")) == "<type>"  # avoids the keyword
        assert format_term(literal('say "hi"')) == '"say \\"hi\\""'


class TestQueryParsing:
    def test_exx1_shape(self, data_dir):
        query = parse_query((data_dir / "queries" / "exx1.anql").read_text(), TEMPORAL)
        assert query.select == (alg.Var("p"), alg.Var("l"), alg.Var("c"))
        assert isinstance(query.pattern, alg.Optional)
        assert query.pattern.filter is None
        bap = query.pattern.left
        assert isinstance(bap, alg.Bap)
        assert bap.patterns[0].annotation == alg.Var("l")

    def test_optional_trailing_filter_becomes_guard(self, data_dir):
        query = parse_query((data_dir / "queries" / "exx2.anql").read_text(), TEMPORAL)
        assert isinstance(query.pattern, alg.Optional)
        assert isinstance(query.pattern.filter, alg.AnnLeq)
        assert isinstance(query.pattern.right, alg.Bap)

    def test_annotation_constant_and_shorthand(self):
        query = parse_query(
            "SELECT ?x WHERE { (?x p ?y):{[2005,2011]} (?x q ?z):[2005] }", TEMPORAL
        )
        bap = query.pattern
        assert bap.patterns[0].annotation == TEMPORAL.parse("{[2005,2011]}")
        assert bap.patterns[1].annotation == TEMPORAL.parse("{[2005,2005]}")

    def test_filter_builtin_with_shorthand(self):
        query = parse_query(
            "SELECT ?comp WHERE { (chadHurley worksFor ?comp):?l FILTER(before(?l, [2005])) }",
            TEMPORAL,
        )
        expr = query.pattern.expr
        assert isinstance(expr, alg.BuiltinCall)
        assert expr.name == "before"
        assert expr.args[1] == TEMPORAL.parse("{[2005,2005]}")

    def test_unknown_builtin_rejected(self):
        with pytest.raises(ParseError):
            parse_query("SELECT ?x WHERE { (?x p ?y):?l FILTER(frobnicate(?l)) }", TEMPORAL)

    def test_union_assign_groupby_modifiers(self):
        query = parse_query(
            """
            SELECT ?x ?n WHERE {
                {(?x p ?y):?l1} UNION {(?x q ?y):?l2}
                ASSIGN join(?l1, ?l2) AS ?l
                GROUPBY(?x) COUNT(?y) AS ?n
            } ORDERBY ?n LIMIT 5
            """,
            TEMPORAL,
        )
        assert query.order_by == alg.Var("n")
        assert query.limit == 5
        group = query.pattern
        assert isinstance(group, alg.GroupBy)
        assert group.keys == (alg.Var("x"),)
        assign = group.pattern
        assert isinstance(assign, alg.Assign)
        assert assign.fn == "join"
        assert isinstance(assign.pattern, alg.Union)

    def test_nested_select(self):
        query = parse_query(
            "SELECT ?x WHERE { (?x p ?y):?l SELECT ?x WHERE { (?x q ?z):?m } }",
            TEMPORAL,
        )
        assert isinstance(query.pattern, alg.Join)
        assert isinstance(query.pattern.right, alg.SubSelect)

    def test_case_insensitive_keywords(self):
        query = parse_query(
            "select ?x where { (?x p ?y):?l Optional{(?x q ?z):?m} } orderby ?x",
            TEMPORAL,
        )
        assert isinstance(query.pattern, alg.Optional)
        assert query.order_by == alg.Var("x")

    def test_provenance_literals_in_patterns_and_filters(self):
        prov = get_domain("provenance")
        query = parse_query(
            "SELECT ?x WHERE { (?x p ?y):(a ^ b) FILTER(?l <= (a v b)) }", prov
        )
        assert query.pattern.pattern.patterns[0].annotation == prov.parse("(a ^ b)")
        assert query.pattern.expr.right == prov.parse("(a v b)")

    def test_boolean_and_compound_labels(self):
        query = parse_query("SELECT ?x WHERE { (?x p ?y):true }", "boolean")
        assert query.pattern.patterns[0].annotation == get_domain("boolean").top
        compound = get_domain("compound(temporal,fuzzy:product)")
        query = parse_query(
            "SELECT ?x WHERE { (?x p ?y):{<{[1,2]},0.5>} }", compound
        )
        assert query.pattern.patterns[0].annotation == compound.parse("{<{[1,2]},0.5>}")

    @pytest.mark.parametrize(
        "bad",
        [
            "SELECT ?x WHERE { }",
            "SELECT WHERE { (?x p ?y):?l }",
            "WHERE { (?x p ?y):?l }",
            "SELECT ?x WHERE { (?x p ?y):?l",
            "SELECT ?x WHERE { (?x p):?l }",
            "SELECT ?x WHERE { (?x p ?y):{[5,1]} }",
        ],
    )
    def test_syntax_errors(self, bad):
        with pytest.raises(ParseError):
            parse_query(bad, TEMPORAL)

    def test_prefix_prologue(self):
        query = parse_query(
            "@prefix ex: <http://ex.org/> .\nSELECT ?x WHERE { (?x ex:p ex:o):?l }",
            TEMPORAL,
        )
        tp = query.pattern.patterns[0]
        assert tp.predicate == iri("http://ex.org/p")


class TestAnswerSerialisation:
    VARS = (alg.Var("x"), alg.Var("l"), alg.Var("n"))

    def rows(self):
        from fractions import Fraction

        return [
            {"x": iri("toivo"), "l": TEMPORAL.parse("{[2002,2009]}"), "n": Fraction(7)},
            {"x": literal("free text")},
        ]

    def test_tsv(self):
        text = serialize_answers_tsv(self.VARS, self.rows())
        lines = text.splitlines()
        assert lines[0] == "?x\t?l\t?n"
        assert lines[1] == "toivo\t{[2002,2009]}\t7"
        assert lines[2] == '"free text"\t\t'

    def test_json(self):
        import json

        text = serialize_answers_json(self.VARS, self.rows())
        doc = json.loads(text)
        assert doc["vars"] == ["x", "l", "n"]
        assert doc["bindings"][0]["l"] == {
            "type": "annotation:temporal",
            "value": "{[2002,2009]}",
        }
        assert doc["bindings"][0]["n"] == {"type": "literal", "value": "7"}
        assert doc["bindings"][1] == {"x": {"type": "literal", "value": "free text"}}
