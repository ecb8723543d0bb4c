"""Provenance formulas: canonical monotone DNF against truth tables."""

from __future__ import annotations

import random

import pytest

from anrdf.domains import get_domain
from anrdf.domains.provenance import (
    FALSE,
    TRUE,
    minimize_clauses,
    prov_join,
    prov_leq,
    prov_meet,
)
from anrdf.errors import AnnotationSyntaxError
from oracles import dnf_implies_by_truth_table

PROV = get_domain("provenance")


def pv(text: str):
    return PROV.parse_payload(text)


class TestCanonicalForm:
    def test_absorption_from_the_paper(self):
        merged = prov_join(pv("(chad ^ foaf ^ workont)"), pv("(chad ^ foaf)"))
        assert merged == pv("(chad ^ foaf)")

    def test_meet_absorption(self):
        # wikipedia AND (wikipedia OR wrong) is wikipedia again
        assert prov_meet(pv("wikipedia"), pv("(wikipedia v wrong)")) == pv("wikipedia")

    def test_false_neutral_for_join(self):
        assert prov_join(pv("p"), FALSE) == pv("p")

    def test_true_and_false_are_distinguished(self):
        assert pv("true") == TRUE
        assert pv("false") == FALSE
        assert prov_meet(TRUE, pv("a")) == pv("a")
        assert prov_join(TRUE, pv("a")) == TRUE

    def test_clause_ordering_is_by_size_then_lex(self):
        value = pv("((b ^ a) v c)")
        assert value == (("c",), ("a", "b"))


class TestOrder:
    def test_examples(self):
        assert prov_leq(pv("(chad ^ foaf)"), pv("chad"))
        assert prov_leq(FALSE, pv("p"))
        assert not prov_leq(pv("chad"), pv("(chad ^ foaf)"))

    def test_agrees_with_truth_tables(self):
        rng = random.Random(23)
        atoms = "abcd"

        def random_dnf():
            roll = rng.random()
            if roll < 0.08:
                return FALSE
            if roll < 0.16:
                return TRUE
            clauses = [
                tuple(rng.sample(atoms, rng.randint(1, 3)))
                for _ in range(rng.randint(1, 3))
            ]
            return minimize_clauses(clauses)

        for _ in range(400):
            a, b = random_dnf(), random_dnf()
            assert prov_leq(a, b) == dnf_implies_by_truth_table(a, b), (a, b)
            # join/meet are truth-functionally correct too
            join = prov_join(a, b)
            assert dnf_implies_by_truth_table(a, join)
            assert dnf_implies_by_truth_table(b, join)
            meet = prov_meet(a, b)
            assert dnf_implies_by_truth_table(meet, a)
            assert dnf_implies_by_truth_table(meet, b)


class TestCodec:
    @pytest.mark.parametrize(
        "text",
        ["chad", "(a ^ b)", "(a v b)", "((a ^ b) v c)", "true", "false", "(a ^ b ^ c)"],
    )
    def test_round_trip(self, text):
        value = PROV.parse(text)
        assert PROV.parse(value.serialize()) == value

    @pytest.mark.parametrize("bad", ["", "(a ^", "(a ^ b v c)", "a b", "(v)", "()"])
    def test_malformed(self, bad):
        with pytest.raises(AnnotationSyntaxError):
            PROV.parse(bad)
