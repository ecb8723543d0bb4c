"""Evaluation of AnQL patterns over a closed annotated graph.

Solutions are partial maps from variable names to terms, annotation
values, or rationals (the latter produced by ASSIGN/aggregates).  Two
solutions are meet-compatible when they agree on every shared term
binding and no shared annotation binding meets to bottom; merging takes
the meet of shared annotation bindings.  After every operator the result
is pruned to domain-maximal answers: a row loses when another row has
the same domain, identical term bindings, and pointwise larger
annotations.

OPTIONAL follows the three-case semantics: (1) merged rows whose filter
holds; the bare left row passes through when either (2) every compatible
right row passes the filter while strictly shrinking every shared
annotation binding (there must be at least one shared annotation
variable, and "shrinking" compares the merged value against the left
one; with no compatible right rows this degenerates to the classical
left join), or (3) every compatible right row fails the filter.

Filters are three-valued; errors never abort evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable

from ..domains import AnnotationValue
from ..errors import QueryTypeError
from ..model import IRI, LITERAL, SKOLEM, AnnotatedGraph, Term
from . import algebra as alg
from .builtins import UNBOUND, BuiltinError, lookup

Value = Any  # Term | AnnotationValue | Fraction
Solution = dict[str, Value]

TRUE = "true"
FALSE = "false"
ERROR = "error"


# -- solution combinators -----------------------------------------------------


def _is_annotation(v: Value) -> bool:
    return isinstance(v, AnnotationValue)


def meet_compatible(a: Solution, b: Solution) -> bool:
    for key in a.keys() & b.keys():
        va, vb = a[key], b[key]
        if _is_annotation(va) and _is_annotation(vb):
            if va.domain.name != vb.domain.name or va.meet(vb).is_bottom:
                return False
        elif va != vb:
            return False
    return True


def meet_union(a: Solution, b: Solution) -> Solution:
    merged = dict(a)
    for key, vb in b.items():
        va = merged.get(key)
        if va is not None and _is_annotation(va) and _is_annotation(vb):
            merged[key] = va.meet(vb)
        else:
            merged[key] = vb
    return merged


def dominates(big: Solution, small: Solution) -> bool:
    """True iff `small` is a strictly subsumed variant of `big`."""
    if small == big or small.keys() != big.keys():
        return False
    for key, vs in small.items():
        vb = big[key]
        if _is_annotation(vs) and _is_annotation(vb):
            if vs.domain.name != vb.domain.name or not vs.leq(vb):
                return False
        elif vs != vb:
            return False
    return True


def prune_maximal(solutions: list[Solution]) -> list[Solution]:
    """Drop rows subsumed by another row (duplicates are preserved)."""
    return [
        s
        for s in solutions
        if not any(dominates(other, s) for other in solutions)
    ]


# -- filter evaluation --------------------------------------------------------


def _resolve(operand: alg.Operand, solution: Solution):
    if isinstance(operand, alg.Var):
        return solution.get(operand.name, UNBOUND)
    return operand


def _coerce_pair(left, right):
    """Lift a bare scalar/IRI operand into the domain of the other side
    of an order comparison (e.g. `?l <= 0.5`, `?l <= chad`)."""
    if _is_annotation(left) == _is_annotation(right):
        return left, right
    anchor, other = (left, right) if _is_annotation(left) else (right, left)
    raw = other
    if isinstance(other, Term) and other.kind == IRI:
        raw = other.lexical
    lifted = anchor.domain.lift_operand(raw)
    if lifted is not None:
        other = AnnotationValue(anchor.domain, lifted)
    return (anchor, other) if _is_annotation(left) else (other, anchor)


def filter_eval(expr: alg.FilterExpr, solution: Solution) -> str:
    if isinstance(expr, alg.Bound):
        return TRUE if expr.var.name in solution else FALSE
    if isinstance(expr, (alg.IsBlank, alg.IsIri, alg.IsLiteral)):
        value = _resolve(expr.operand, solution)
        if value is UNBOUND:
            return ERROR
        if not isinstance(value, Term):
            return FALSE
        wanted = {
            alg.IsBlank: SKOLEM,
            alg.IsIri: IRI,
            alg.IsLiteral: LITERAL,
        }[type(expr)]
        return TRUE if value.kind == wanted else FALSE
    if isinstance(expr, alg.Eq):
        left = _resolve(expr.left, solution)
        right = _resolve(expr.right, solution)
        if left is UNBOUND or right is UNBOUND:
            return ERROR
        return TRUE if left == right else FALSE
    if isinstance(expr, alg.Not):
        inner = filter_eval(expr.inner, solution)
        if inner == ERROR:
            return ERROR
        return FALSE if inner == TRUE else TRUE
    if isinstance(expr, alg.Or):
        left = filter_eval(expr.left, solution)
        right = filter_eval(expr.right, solution)
        if TRUE in (left, right):
            return TRUE
        if ERROR in (left, right):
            return ERROR
        return FALSE
    if isinstance(expr, alg.And):
        left = filter_eval(expr.left, solution)
        right = filter_eval(expr.right, solution)
        if ERROR in (left, right):
            return ERROR
        return TRUE if left == TRUE and right == TRUE else FALSE
    if isinstance(expr, alg.AnnLeq):
        left = _resolve(expr.left, solution)
        right = _resolve(expr.right, solution)
        left, right = _coerce_pair(left, right)
        if (
            _is_annotation(left)
            and _is_annotation(right)
            and left.domain.name == right.domain.name
        ):
            return TRUE if left.leq(right) else FALSE
        return FALSE
    if isinstance(expr, alg.BuiltinCall):
        args = tuple(_resolve(a, solution) for a in expr.args)
        try:
            result = lookup(expr.name)(*args)
        except BuiltinError:
            return FALSE
        return TRUE if result is True else FALSE
    raise TypeError(f"not a filter expression: {expr!r}")


# -- pattern evaluation -------------------------------------------------------


def eval_bap(graph: AnnotatedGraph, bap: alg.Bap) -> list[Solution]:
    """Match triple patterns left to right, constants by subsumption and
    annotation variables by meet-combination of the stored values."""
    solutions: list[Solution] = [{}]
    for tp in bap.patterns:
        solutions = [
            extended
            for solution in solutions
            for extended in _match_triple(graph, tp, solution)
        ]
    return prune_maximal(solutions)


def _match_triple(
    graph: AnnotatedGraph, tp: alg.TriplePattern, solution: Solution
) -> Iterable[Solution]:
    def fixed(slot: alg.TermSlot) -> Term | None:
        if isinstance(slot, alg.Var):
            value = solution.get(slot.name)
            return value if isinstance(value, Term) else None
        return slot

    for t, stored in graph.match(fixed(tp.subject), fixed(tp.predicate), fixed(tp.object)):
        extended = dict(solution)
        if not _bind_terms(
            extended,
            (tp.subject, tp.predicate, tp.object),
            (t.subject, t.predicate, t.object),
        ):
            continue
        label = tp.annotation
        if label is None:
            label = graph.domain.top
        if isinstance(label, alg.Var):
            current = extended.get(label.name)
            if current is None:
                extended[label.name] = stored
            elif _is_annotation(current):
                combined = current.meet(stored)
                if combined.is_bottom:
                    continue
                extended[label.name] = combined
            else:
                continue
        else:
            if label.domain.name != graph.domain.name or not label.leq(stored):
                continue
        yield extended


def _bind_terms(solution: Solution, slots, terms) -> bool:
    for slot, term in zip(slots, terms):
        if isinstance(slot, alg.Var):
            existing = solution.get(slot.name)
            if existing is None:
                solution[slot.name] = term
            elif existing != term:
                return False
        elif slot != term:
            return False
    return True


def _shared_annotation_vars(a: Solution, b: Solution) -> list[str]:
    return [
        key
        for key in a.keys() & b.keys()
        if _is_annotation(a[key]) and _is_annotation(b[key])
    ]


def _eval_optional(
    graph: AnnotatedGraph, node: alg.Optional, diagnostics: list[str]
) -> list[Solution]:
    left_rows = eval_pattern(graph, node.left, diagnostics)
    right_rows = eval_pattern(graph, node.right, diagnostics)
    out: list[Solution] = []
    for left in left_rows:
        compatible = [r for r in right_rows if meet_compatible(left, r)]
        merged_true = []
        all_filter_true = True
        all_filter_false = True
        all_shrink = True
        for right in compatible:
            merged = meet_union(left, right)
            verdict = TRUE if node.filter is None else filter_eval(node.filter, merged)
            if verdict == TRUE:
                merged_true.append(merged)
                all_filter_false = False
            elif verdict == FALSE:
                all_filter_true = False
            else:  # an error verdict satisfies neither pass-through case
                all_filter_true = False
                all_filter_false = False
            shared = _shared_annotation_vars(left, right)
            if not shared or not all(
                merged[key] != left[key] and merged[key].leq(left[key])
                for key in shared
            ):
                all_shrink = False
        out.extend(merged_true)
        if not compatible:
            out.append(left)
        elif (all_filter_true and all_shrink) or all_filter_false:
            out.append(left)
    return prune_maximal(out)


def _apply_assign(
    graph: AnnotatedGraph, node: alg.Assign, diagnostics: list[str]
) -> list[Solution]:
    rows = eval_pattern(graph, node.pattern, diagnostics)
    out = []
    for row in rows:
        value = _call(node.fn, node.args, row)
        if value is None:
            continue
        if _is_annotation(value) and value.is_bottom:
            continue  # annotation variables never hold bottom
        updated = dict(row)
        updated[node.target.name] = value
        out.append(updated)
    return prune_maximal(out)


def _call(fn: str, args: tuple[alg.Operand, ...], row: Solution):
    resolved = tuple(_resolve(a, row) for a in args)
    if fn == "":
        value = resolved[0]
        return None if value is UNBOUND else value
    try:
        return lookup(fn)(*resolved)
    except BuiltinError:
        return None


def _apply_groupby(
    graph: AnnotatedGraph, node: alg.GroupBy, diagnostics: list[str]
) -> list[Solution]:
    inner_vars = {v.name for v in alg.pattern_vars(node.pattern)}
    for aggregate in node.aggregates:
        if aggregate.target.name in inner_vars:
            raise QueryTypeError(
                f"aggregate target ?{aggregate.target.name} already occurs in the pattern"
            )
        for arg in aggregate.args:
            if isinstance(arg, alg.Var) and any(k.name == arg.name for k in node.keys):
                raise QueryTypeError(
                    f"aggregate argument ?{arg.name} is a grouping key"
                )
    rows = eval_pattern(graph, node.pattern, diagnostics)
    groups: dict[tuple, list[Solution]] = {}
    for row in rows:
        key = tuple(_group_key(row.get(k.name)) for k in node.keys)
        groups.setdefault(key, []).append(row)
    out: list[Solution] = []
    seen: set[tuple] = set()
    for members in groups.values():
        projected: Solution = {}
        for k in node.keys:
            if k.name in members[0]:
                projected[k.name] = members[0][k.name]
        ok = True
        for aggregate in node.aggregates:
            value = _aggregate(aggregate, members, diagnostics)
            if value is None:
                ok = False
                break
            projected[aggregate.target.name] = value
        if not ok:
            continue
        snapshot = tuple(sorted((k, _group_key(v)) for k, v in projected.items()))
        if snapshot in seen:
            continue  # grouped output is a set
        seen.add(snapshot)
        out.append(projected)
    return prune_maximal(out)


def _group_key(value: Value):
    if value is None:
        return ("unbound",)
    if isinstance(value, Term):
        return ("term", value.kind, value.lexical)
    if _is_annotation(value):
        return ("annotation", value.domain.name, value.serialize())
    return ("number", value)


def _aggregate(
    aggregate: alg.Aggregate, members: list[Solution], diagnostics: list[str]
) -> Value | None:
    values = []
    for row in members:
        value = _call(aggregate.fn, aggregate.args, row)
        if value is not None:
            values.append(value)
    op = aggregate.op
    if op == "COUNT":
        return Fraction(len(values))
    if not values:
        diagnostics.append(f"{op}: no defined values in group")
        return None
    if op in ("SUM", "AVG"):
        if not all(isinstance(v, Fraction) for v in values):
            diagnostics.append(f"{op}: non-numeric value in group; group dropped")
            return None
        total = sum(values, Fraction(0))
        return total if op == "SUM" else total / len(values)
    if op in ("MAX", "MIN"):
        pick = max if op == "MAX" else min
        if all(isinstance(v, Fraction) for v in values):
            return pick(values)
        if all(isinstance(v, Term) and v.kind == LITERAL for v in values):
            return pick(values, key=lambda t: t.lexical)
        diagnostics.append(f"{op}: values are not totally ordered; group dropped")
        return None
    if op in ("JOIN", "MEET"):
        if not all(_is_annotation(v) for v in values):
            diagnostics.append(f"{op}: non-annotation value in group; group dropped")
            return None
        acc = values[0]
        try:
            for value in values[1:]:
                acc = acc.join(value) if op == "JOIN" else acc.meet(value)
        except Exception:
            diagnostics.append(f"{op}: mixed domains in group; group dropped")
            return None
        return acc
    raise QueryTypeError(f"unknown aggregate {op!r}")


def _apply_orderby(rows: list[Solution], var: alg.Var) -> list[Solution]:
    values = [row.get(var.name) for row in rows]
    bound = [v for v in values if v is not None]
    if all(isinstance(v, Fraction) for v in bound):
        key = lambda v: v
    elif all(isinstance(v, Term) for v in bound):
        key = lambda v: v.sort_key()
    elif all(_is_annotation(v) for v in bound) and len({v.domain.name for v in bound}) <= 1:
        key = lambda v: v.sort_key()
    else:
        raise QueryTypeError(
            f"ORDERBY ?{var.name}: values are not mutually orderable"
        )
    # Unbound rows sort first; the sort is stable.
    return sorted(rows, key=lambda r: (0,) if r.get(var.name) is None else (1, key(r[var.name])))


def eval_pattern(
    graph: AnnotatedGraph, pattern: alg.Pattern, diagnostics: list[str] | None = None
) -> list[Solution]:
    if diagnostics is None:
        diagnostics = []
    if isinstance(pattern, alg.Bap):
        return eval_bap(graph, pattern)
    if isinstance(pattern, alg.Join):
        left = eval_pattern(graph, pattern.left, diagnostics)
        right = eval_pattern(graph, pattern.right, diagnostics)
        out = [
            meet_union(a, b)
            for a in left
            for b in right
            if meet_compatible(a, b)
        ]
        return prune_maximal(out)
    if isinstance(pattern, alg.Union):
        out = eval_pattern(graph, pattern.left, diagnostics) + eval_pattern(
            graph, pattern.right, diagnostics
        )
        return prune_maximal(out)
    if isinstance(pattern, alg.Optional):
        return _eval_optional(graph, pattern, diagnostics)
    if isinstance(pattern, alg.Filter):
        rows = eval_pattern(graph, pattern.pattern, diagnostics)
        return prune_maximal(
            [r for r in rows if filter_eval(pattern.expr, r) == TRUE]
        )
    if isinstance(pattern, alg.Assign):
        return _apply_assign(graph, pattern, diagnostics)
    if isinstance(pattern, alg.GroupBy):
        return _apply_groupby(graph, pattern, diagnostics)
    if isinstance(pattern, alg.OrderBy):
        rows = eval_pattern(graph, pattern.pattern, diagnostics)
        return _apply_orderby(rows, pattern.var)
    if isinstance(pattern, alg.Limit):
        rows = eval_pattern(graph, pattern.pattern, diagnostics)
        return rows[: pattern.count]
    if isinstance(pattern, alg.SubSelect):
        rows = eval_pattern(graph, pattern.pattern, diagnostics)
        names = [v.name for v in pattern.variables]
        projected = [
            {name: row[name] for name in names if name in row} for row in rows
        ]
        return prune_maximal(projected)
    raise TypeError(f"not a pattern: {pattern!r}")


def evaluate_query(
    graph: AnnotatedGraph,
    query: alg.QueryDocument,
    diagnostics: list[str] | None = None,
) -> list[Solution]:
    """Evaluate a SELECT query; rows keep only the selected variables."""
    pattern: alg.Pattern = query.pattern
    if query.order_by is not None:
        pattern = alg.OrderBy(pattern, query.order_by)
    pattern = alg.SubSelect(query.select, pattern)
    if query.limit is not None:
        pattern = alg.Limit(pattern, query.limit)
    return eval_pattern(graph, pattern, diagnostics)
