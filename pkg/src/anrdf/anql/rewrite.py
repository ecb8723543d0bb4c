"""Parse-time rewrites giving non-annotated triple patterns an
annotation label.

Three choices: one shared fresh annotation variable for every bare
pattern, a distinct fresh variable per pattern, or the top constant.
The engine's own default for a bare pattern is the top constant, so the
`top` rewrite is the identity in effect; the variable rewrites change
OPTIONAL/join behaviour by making annotations visible to the algebra.
"""

from __future__ import annotations

from itertools import count

from ..domains import Domain
from . import algebra as alg

MODES = ("shared-var", "fresh-vars", "top")


def rewrite_defaults(
    query: alg.QueryDocument, mode: str, domain: Domain
) -> alg.QueryDocument:
    if mode not in MODES:
        raise ValueError(f"unknown rewrite mode {mode!r}")
    used = {v.name for v in alg.pattern_vars(query.pattern)}
    used.update(v.name for v in query.select)
    counter = count()

    def fresh() -> alg.Var:
        while True:
            name = f"_a{next(counter)}"
            if name not in used:
                used.add(name)
                return alg.Var(name)

    shared = fresh() if mode == "shared-var" else None

    def label() -> alg.AnnotationLabel:
        if mode == "top":
            return domain.top
        if mode == "shared-var":
            return shared
        return fresh()

    def walk(p: alg.Pattern) -> alg.Pattern:
        if isinstance(p, alg.Bap):
            return alg.Bap(
                tuple(
                    tp if tp.annotation is not None else alg.TriplePattern(
                        tp.subject, tp.predicate, tp.object, label()
                    )
                    for tp in p.patterns
                )
            )
        if isinstance(p, alg.Join):
            return alg.Join(walk(p.left), walk(p.right))
        if isinstance(p, alg.Union):
            return alg.Union(walk(p.left), walk(p.right))
        if isinstance(p, alg.Optional):
            return alg.Optional(walk(p.left), walk(p.right), p.filter)
        if isinstance(p, alg.Filter):
            return alg.Filter(walk(p.pattern), p.expr)
        if isinstance(p, alg.Assign):
            return alg.Assign(walk(p.pattern), p.fn, p.args, p.target)
        if isinstance(p, alg.GroupBy):
            return alg.GroupBy(walk(p.pattern), p.keys, p.aggregates)
        if isinstance(p, alg.OrderBy):
            return alg.OrderBy(walk(p.pattern), p.var)
        if isinstance(p, alg.Limit):
            return alg.Limit(walk(p.pattern), p.count)
        if isinstance(p, alg.SubSelect):
            return alg.SubSelect(p.variables, walk(p.pattern))
        raise TypeError(f"not a pattern: {p!r}")

    return alg.QueryDocument(
        select=query.select,
        pattern=walk(query.pattern),
        order_by=query.order_by,
        limit=query.limit,
    )
