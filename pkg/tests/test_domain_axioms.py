"""Axiom suites for every shipped domain, plus registry behaviour."""

from __future__ import annotations

from fractions import Fraction

import pytest

from anrdf.domains import (
    AnnotationValue,
    Domain,
    axiom_suite,
    get_domain,
    primitive_domain_ids,
)
from anrdf.errors import DomainMismatchError, NotALatticeError, UnknownDomainError

ALL_DOMAIN_IDS = primitive_domain_ids() + [
    "compound(temporal,fuzzy:product)",
    "compound(temporal,provenance)",
]

FULLY_LAWFUL_DOMAIN_IDS = primitive_domain_ids() + [
    "compound(temporal,provenance)",
    "compound(temporal,fuzzy:min)",
    "compound(temporal,boolean)",
]


@pytest.mark.parametrize("domain_id", FULLY_LAWFUL_DOMAIN_IDS)
def test_axiom_suite_passes(domain_id):
    domain = get_domain(domain_id)
    samples = 60 if domain_id.startswith("compound") else 300
    report = axiom_suite(domain, samples=samples, seed=7)
    assert report.all_passed, report.format()


@pytest.mark.parametrize("tnorm", ["product", "lukasiewicz"])
def test_compound_distributivity_boundary(tnorm):
    """Known limitation: with a non-idempotent second-component meet,
    the pair-set meet distributes over the pair-set join only up to an
    inequality, because re-joining distributed meets multiplies the
    shared degree in twice.  Every other axiom holds."""
    domain = get_domain(f"compound(temporal,fuzzy:{tnorm})")
    report = axiom_suite(domain, samples=120, seed=7)
    failed = {c.name for c in report.checks if not c.passed}
    assert failed == {"meet distributes over join"}, report.format()

    # Minimal witness: one annotation spanning two islands, split and
    # re-joined against each island separately.
    t = get_domain("temporal")
    a = domain.value([(t.parse_payload("{[0,1],[4,5]}"), Fraction(1, 2))])
    b = domain.value([(t.parse_payload("{[0,1]}"), Fraction(1))])
    c = domain.value([(t.parse_payload("{[4,5]}"), Fraction(1))])
    lhs = a.meet(b.join(c))
    rhs = a.meet(b).join(a.meet(c))
    assert lhs != rhs
    assert rhs.leq(lhs)  # the distributed side only under-approximates


def test_boolean_suite_is_exhaustive():
    report = axiom_suite(get_domain("boolean"), samples=5, seed=0)
    assert report.exhaustive
    assert report.all_passed


class _BrokenDomain(Domain):
    """Negative control: meet is not commutative."""

    name = "broken"
    is_lattice = False

    def join_payload(self, a, b):
        return max(a, b)

    def meet_payload(self, a, b):
        return a  # deliberately wrong

    def bottom_payload(self):
        return 0

    def top_payload(self):
        return 9

    def format_payload(self, payload):
        return str(payload)

    def validate_payload(self, payload):
        return payload

    def random_payload(self, rng):
        return rng.randint(0, 9)


def test_broken_domain_reports_counterexample():
    report = axiom_suite(_BrokenDomain(), samples=100, seed=7)
    assert not report.all_passed
    failed = {c.name for c in report.checks if not c.passed}
    assert "meet commutative" in failed
    commutative = next(c for c in report.checks if c.name == "meet commutative")
    assert commutative.counterexample is not None


def test_join_meet_examples_from_each_domain():
    temporal = get_domain("temporal")
    a = temporal.parse("{[2000,2006]}")
    b = temporal.parse("{[2003,2008]}")
    assert a.join(b) == temporal.parse("{[2000,2008]}")

    fuzzy = get_domain("fuzzy:product")
    assert fuzzy.parse("0.7").join(fuzzy.parse("0.6")) == fuzzy.parse("0.7")
    assert fuzzy.parse("0.7").meet(fuzzy.parse("0.6")).payload == Fraction(42, 100)

    for domain_id in ALL_DOMAIN_IDS:
        domain = get_domain(domain_id)
        value = domain.random_value(__import__("random").Random(3))
        assert value.join(domain.bottom) == value
        assert value.meet(domain.top) == value
        assert value.meet(domain.bottom) == domain.bottom
        assert value.join(domain.top) == domain.top


def test_leq_examples():
    temporal = get_domain("temporal")
    assert temporal.parse("{[2003,2004]}").leq(temporal.parse("{[2000,2006]}"))
    fuzzy = get_domain("fuzzy:product")
    assert not fuzzy.parse("0.7").leq(fuzzy.parse("0.6"))
    value = temporal.parse("{[1,2]}")
    assert value.leq(value)


def test_domain_mismatch_raises():
    with pytest.raises(DomainMismatchError):
        get_domain("temporal").parse("{[1,2]}").join(get_domain("fuzzy:min").parse("0.5"))


def test_registry():
    assert get_domain("fuzzy:min").is_lattice
    assert not get_domain("fuzzy:product").is_lattice
    assert get_domain("temporal") is get_domain("temporal")
    with pytest.raises(UnknownDomainError):
        get_domain("no-such-domain")
    with pytest.raises(NotALatticeError):
        get_domain("compound(fuzzy:product,temporal)")
    with pytest.raises(UnknownDomainError):
        get_domain("compound(compound(temporal,boolean),boolean)")


def test_lattice_flags_match_the_glb_law():
    # is_lattice is declared; the axiom harness checks it where declared.
    # For fuzzy:product the law genuinely fails, which keeps it out of
    # compound first components.
    fuzzy = get_domain("fuzzy:product")
    z, x, y = (
        AnnotationValue(fuzzy, Fraction(1, 2)),
        AnnotationValue(fuzzy, Fraction(3, 5)),
        AnnotationValue(fuzzy, Fraction(3, 5)),
    )
    assert z.leq(x) and z.leq(y)
    assert not z.leq(x.meet(y))  # 1/2 > 9/25
