"""Forward-chaining closure over the annotated rho-df rules.

The rule schemata are domain independent: every rule meets the premise
annotations and merges the conclusion into the store, where duplicate
triples join.  Rules never fire into bottom, and a firing whose
conclusion is already subsumed changes nothing, which (together with the
finiteness of derivable values in the shipped domains) makes the
fixpoint terminate.  A rule-firing cap guards against pathological
domains.

Rules are plain data (premise patterns over meta-variables plus a
conclusion pattern), so the set can be extended to richer vocabularies;
only the rho-df set ships.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .domains import AnnotationValue, get_domain
from .errors import ClosureIterationError
from .model import DOM, LITERAL, RANGE, SC, SP, TYPE, AnnotatedGraph, Term, Triple

Slot = Term | str  # fixed term or meta-variable name
PatternTriple = tuple[Slot, Slot, Slot]


@dataclass(frozen=True)
class Rule:
    name: str
    premises: tuple[PatternTriple, ...]
    conclusion: PatternTriple


RHO_DF_RULES: tuple[Rule, ...] = (
    Rule("sp-transitivity", (("A", SP, "B"), ("B", SP, "C")), ("A", SP, "C")),
    Rule("sp-application", (("D", SP, "E"), ("X", "D", "Y")), ("X", "E", "Y")),
    Rule("sc-transitivity", (("A", SC, "B"), ("B", SC, "C")), ("A", SC, "C")),
    Rule("type-propagation", (("A", SC, "B"), ("X", TYPE, "A")), ("X", TYPE, "B")),
    Rule("domain-typing", (("D", DOM, "B"), ("X", "D", "Y")), ("X", TYPE, "B")),
    Rule("range-typing", (("D", RANGE, "B"), ("X", "D", "Y")), ("Y", TYPE, "B")),
    Rule(
        "implicit-domain-typing",
        (("A", DOM, "B"), ("D", SP, "A"), ("X", "D", "Y")),
        ("X", TYPE, "B"),
    ),
    Rule(
        "implicit-range-typing",
        (("A", RANGE, "B"), ("D", SP, "A"), ("X", "D", "Y")),
        ("Y", TYPE, "B"),
    ),
)

DEFAULT_MAX_FIRINGS = 1_000_000

Binding = dict[str, Term]


def _unify(pattern: PatternTriple, t: Triple, binding: Binding) -> Binding | None:
    out = dict(binding)
    for slot, term in zip(pattern, (t.subject, t.predicate, t.object)):
        if isinstance(slot, Term):
            if slot != term:
                return None
        else:
            seen = out.get(slot)
            if seen is None:
                out[slot] = term
            elif seen != term:
                return None
    return out


def _instances(
    graph: AnnotatedGraph, pattern: PatternTriple, binding: Binding
) -> Iterable[tuple[Binding, AnnotationValue]]:
    def resolve(slot: Slot) -> Term | None:
        if isinstance(slot, Term):
            return slot
        return binding.get(slot)

    s, p, o = (resolve(slot) for slot in pattern)
    if p is not None and p.kind == LITERAL:
        return
    for t, value in graph.match(s, p, o):
        extended = _unify(pattern, t, binding)
        if extended is not None:
            yield extended, value


def _fire(
    graph: AnnotatedGraph,
    rule: Rule,
    seed_index: int,
    binding: Binding,
    seed_value: AnnotationValue,
) -> Iterable[tuple[Triple, AnnotationValue]]:
    """Join the remaining premises against the graph and emit conclusions."""
    rest = [p for i, p in enumerate(rule.premises) if i != seed_index]

    def expand(
        index: int, bound: Binding, value: AnnotationValue
    ) -> Iterable[tuple[Binding, AnnotationValue]]:
        if index == len(rest):
            yield bound, value
            return
        for extended, premise_value in _instances(graph, rest[index], bound):
            yield from expand(index + 1, extended, value.meet(premise_value))

    cs, cp, co = rule.conclusion
    for bound, value in expand(0, binding, seed_value):
        subject = cs if isinstance(cs, Term) else bound[cs]
        predicate = cp if isinstance(cp, Term) else bound[cp]
        obj = co if isinstance(co, Term) else bound[co]
        if predicate.kind == LITERAL:
            continue
        yield Triple(subject, predicate, obj), value


def closure(
    graph: AnnotatedGraph,
    rules: Sequence[Rule] = RHO_DF_RULES,
    max_firings: int = DEFAULT_MAX_FIRINGS,
) -> AnnotatedGraph:
    """Least fixpoint of the rule set over `graph`, as a frozen new graph.

    Semi-naive: only triples whose stored annotation changed are re-used
    as rule seeds, and firings whose conclusion is subsumed are dropped.
    """
    out = graph.copy()
    agenda: deque[Triple] = deque(t for t, _ in out.statements())
    firings = 0
    while agenda:
        seed = agenda.popleft()
        seed_value = out.get(seed)
        if seed_value is None:
            continue
        for rule in rules:
            for index, premise in enumerate(rule.premises):
                binding = _unify(premise, seed, {})
                if binding is None:
                    continue
                for conclusion, value in list(
                    _fire(out, rule, index, binding, seed_value)
                ):
                    firings += 1
                    if firings > max_firings:
                        raise ClosureIterationError(
                            f"closure exceeded {max_firings} rule firings"
                        )
                    if value.is_bottom:
                        continue
                    if out.insert(conclusion, value):
                        agenda.append(conclusion)
    return out.freeze()


def apply_defaults(
    graph: AnnotatedGraph,
    plain_triples: Iterable[Triple],
    mode: str = "top",
) -> tuple[AnnotatedGraph, AnnotatedGraph | None]:
    """Fold non-annotated triples into `graph` according to `mode`.

    top:       annotate each plain triple with the domain's top.
    bottom:    drop plain triples (a bottom annotation is never stored).
    segregate: keep plain triples apart, in a boolean side graph.

    Returns (graph, side graph or None); `graph` is not mutated.
    """
    if mode not in ("top", "bottom", "segregate"):
        raise ValueError(f"unknown default-annotation mode {mode!r}")
    if mode == "segregate":
        side = AnnotatedGraph(get_domain("boolean"))
        top = side.domain.top
        for t in plain_triples:
            side.insert(t, top)
        return graph, side
    merged = graph.copy()
    if mode == "top":
        top = graph.domain.top
        for t in plain_triples:
            merged.insert(t, top)
    return merged, None
