#!/usr/bin/env python3
"""A tour of the annotation domains.

Every domain is an idempotent commutative semiring: `join` merges
evidence about one statement, `meet` conjoins evidence across inference
steps, and `join` induces the partial order used for subsumption.  Run
this script to see each shipped domain do its thing.
"""

from anrdf import axiom_suite, get_domain


def show(title: str) -> None:
    print()
    print(f"== {title}")


show("temporal: finite sets of disjoint closed intervals")
temporal = get_domain("temporal")
a = temporal.parse("{[2,5],[8,12]}")
b = temporal.parse("{[4,6],[9,15]}")
print(f"  {a.serialize()} join {b.serialize()} = {a.join(b).serialize()}")
print(f"  {a.serialize()} meet {b.serialize()} = {a.meet(b).serialize()}")
print(f"  {{[2003,2004]}} <= {{[2000,2006]}} ? ",
      temporal.parse("{[2003,2004]}").leq(temporal.parse("{[2000,2006]}")))
print(f"  top is {temporal.top.serialize()}, bottom is {temporal.bottom.serialize()}")

show("fuzzy degrees with three t-norms")
for tnorm in ("min", "product", "lukasiewicz"):
    domain = get_domain(f"fuzzy:{tnorm}")
    x, y = domain.parse("0.3"), domain.parse("0.5")
    print(f"  {tnorm:<12} 0.3 meet 0.5 = {x.meet(y).serialize()}")

show("provenance: monotone formulas over source identifiers")
prov = get_domain("provenance")
big = prov.parse("((chad ^ foaf ^ workont) v (chad ^ foaf))")
print(f"  ((chad ^ foaf ^ workont) v (chad ^ foaf)) minimises to {big.serialize()}")
wiki = prov.parse("wikipedia").meet(prov.parse("(wikipedia v wrong)"))
print(f"  wikipedia ^ (wikipedia v wrong) = {wiki.serialize()}")

show("the axiom harness (seeded, with counterexamples on failure)")
report = axiom_suite(get_domain("fuzzy:product"), samples=300, seed=7)
print("  fuzzy:product:", "all axioms hold" if report.all_passed else "FAILURE")
report = axiom_suite(get_domain("boolean"), samples=300, seed=7)
print("  boolean domain checked exhaustively:", report.exhaustive)
