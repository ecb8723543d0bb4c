"""Compound annotation domains built from two primitive domains.

A compound value is a finite set of pairs <x, y> (x from D1, y from D2)
whose meaning is the function mapping each z in L1 to the least upper
bound of `meet2-fold of the y's over J` across all subsets J of the pair
set whose joined x's dominate z.  Such functions are quasihomomorphisms:
they flip join and meet into bounds in the second domain and are antitone.

Distinct pair sets can denote the same function, so values are kept in a
canonical normal form computed by saturation (adding every pair derivable
with the component operations) followed by reduction (dropping pairs
dominated componentwise and pairs with a bottom component).  The textbook
saturation enumerates subsets of the powerset of the input and is kept,
size-capped, as the test oracle; the production path closes the set under
the two pairwise combinators

    <a, b>, <c, d>  ->  <a meet1 c, b join2 d>
    <a, b>, <c, d>  ->  <a join1 c, b meet2 d>

while maintaining a dominance antichain, which yields the same normal
form on every input the oracle can handle.

Normalisation is only sound when D1 is a lattice (meet1 must be the
greatest lower bound), which is enforced when the domain is constructed.
"""

from __future__ import annotations

import random
from typing import Any, Iterable

from ..errors import AnnotationSyntaxError, NotALatticeError, SaturationBoundError
from .axioms import AxiomCheck, AxiomReport
from .base import Domain

Pair = tuple[Any, Any]

NAIVE_SATURATE_BOUND = 4
_FAST_SATURATE_CAP = 200_000


def evaluate(d1: Domain, d2: Domain, pairs: Iterable[Pair], z: Any) -> Any:
    """Apply the function denoted by `pairs` to the D1 value `z`.

    Returns bottom of D2 when no subset of the pairs covers `z`.
    """
    if not d1.is_lattice:
        raise NotALatticeError(f"{d1.name} is not a lattice")
    items = list(pairs)
    n = len(items)
    # Incremental subset folds over bitmasks: joins of x's, meets of y's.
    join1 = [d1.bottom_payload()] * (1 << n)
    meet2 = [d2.top_payload()] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        join1[mask] = d1.join_payload(join1[rest], items[low][0])
        meet2[mask] = d2.meet_payload(meet2[rest], items[low][1])
    result = d2.bottom_payload()
    for mask in range(1 << n):
        if d1.leq_payload(z, join1[mask]):
            result = d2.join_payload(result, meet2[mask])
    return result


def saturate_naive(
    d1: Domain,
    d2: Domain,
    pairs: Iterable[Pair],
    bound: int = NAIVE_SATURATE_BOUND,
) -> set[Pair]:
    """Literal saturation: one entry per subset X of the powerset of the
    input, for each of the two fold orientations.  Doubly exponential;
    refuses inputs larger than `bound` pairs."""
    items = list(pairs)
    n = len(items)
    if n > bound:
        raise SaturationBoundError(
            f"naive saturation limited to {bound} pairs, got {n}"
        )
    m = 1 << n  # number of subsets J
    meet1 = [d1.top_payload()] * m
    join1 = [d1.bottom_payload()] * m
    join2 = [d2.bottom_payload()] * m
    meet2 = [d2.top_payload()] * m
    for mask in range(1, m):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        x, y = items[low]
        meet1[mask] = d1.meet_payload(meet1[rest], x)
        join1[mask] = d1.join_payload(join1[rest], x)
        join2[mask] = d2.join_payload(join2[rest], y)
        meet2[mask] = d2.meet_payload(meet2[rest], y)
    # X ranges over sets of subsets; fold incrementally over X's low member.
    out: set[Pair] = set()
    line1 = [(d1.bottom_payload(), d2.top_payload())] * (1 << m)
    line2 = [(d1.top_payload(), d2.bottom_payload())] * (1 << m)
    for xmask in range(1 << m):
        if xmask:
            low = (xmask & -xmask).bit_length() - 1
            rest = xmask & (xmask - 1)
            a1, b1 = line1[rest]
            line1[xmask] = (
                d1.join_payload(a1, meet1[low]),
                d2.meet_payload(b1, join2[low]),
            )
            a2, b2 = line2[rest]
            line2[xmask] = (
                d1.meet_payload(a2, join1[low]),
                d2.join_payload(b2, meet2[low]),
            )
        out.add(line1[xmask])
        out.add(line2[xmask])
    return out


def reduce_pairs(d1: Domain, d2: Domain, pairs: Iterable[Pair]) -> set[Pair]:
    """Drop pairs with a bottom component and pairs dominated by a
    distinct pair in both components."""
    bot1, bot2 = d1.bottom_payload(), d2.bottom_payload()
    live = {p for p in pairs if p[0] != bot1 and p[1] != bot2}
    return {
        p
        for p in live
        if not any(
            q != p
            and d1.leq_payload(p[0], q[0])
            and d2.leq_payload(p[1], q[1])
            for q in live
        )
    }


def saturate_fast(d1: Domain, d2: Domain, pairs: Iterable[Pair]) -> set[Pair]:
    """Fixpoint closure under the two pairwise combinators, pruned to a
    dominance antichain at every step.

    Dominated pairs can only generate dominated pairs (both combinators
    are monotone in each argument), so pruning preserves the maximal
    elements of the full closure.
    """
    bot1, bot2 = d1.bottom_payload(), d2.bottom_payload()

    def dominated(p: Pair, others) -> bool:
        return any(
            q != p
            and d1.leq_payload(p[0], q[0])
            and d2.leq_payload(p[1], q[1])
            for q in others
        )

    front: set[Pair] = set()
    for p in pairs:
        if p[0] == bot1 or p[1] == bot2 or dominated(p, front):
            continue
        front = {q for q in front if not dominated(q, {p})} | {p}
    queue = list(front)
    steps = 0
    while queue:
        p = queue.pop()
        if p not in front:
            continue  # pruned while waiting
        for q in list(front):
            for r in (
                (d1.meet_payload(p[0], q[0]), d2.join_payload(p[1], q[1])),
                (d1.join_payload(p[0], q[0]), d2.meet_payload(p[1], q[1])),
            ):
                steps += 1
                if steps > _FAST_SATURATE_CAP:
                    raise SaturationBoundError("saturation did not converge")
                if r[0] == bot1 or r[1] == bot2 or r in front:
                    continue
                if dominated(r, front):
                    continue
                front = {s for s in front if not dominated(s, {r})} | {r}
                queue.append(r)
    return front


def normalise(d1: Domain, d2: Domain, pairs: Iterable[Pair]) -> frozenset[Pair]:
    """Canonical representative of the pair set, preserving its function."""
    if not d1.is_lattice:
        raise NotALatticeError(f"{d1.name} is not a lattice")
    return frozenset(reduce_pairs(d1, d2, saturate_fast(d1, d2, pairs)))


def generated_sublattice(d1: Domain, xs: Iterable[Any]) -> set[Any]:
    """Close `xs` (plus bottom and top) under join and meet of D1.

    The function denoted by a pair set is determined by its restriction
    to this finite set, which justifies the finite canonicity checks.
    """
    values = set(xs) | {d1.bottom_payload(), d1.top_payload()}
    while True:
        fresh = set()
        for a in values:
            for b in values:
                for c in (d1.join_payload(a, b), d1.meet_payload(a, b)):
                    if c not in values:
                        fresh.add(c)
        if not fresh:
            return values
        values |= fresh


class CompoundDomain(Domain):
    """Annotation domain of normalised pair sets over (D1, D2)."""

    def __init__(self, d1: Domain, d2: Domain):
        if not d1.is_lattice:
            raise NotALatticeError(
                f"compound domains need a lattice first component; "
                f"{d1.name} does not satisfy the greatest-lower-bound law "
                f"(use temporal, fuzzy:min, boolean, or provenance)"
            )
        self.d1 = d1
        self.d2 = d2
        self.name = f"compound({d1.name},{d2.name})"
        self.is_lattice = False

    def _canonical(self, pairs: Iterable[Pair]) -> tuple[Pair, ...]:
        normal = normalise(self.d1, self.d2, pairs)
        return tuple(
            sorted(
                normal,
                key=lambda p: (
                    self.d1.format_payload(p[0]),
                    self.d2.format_payload(p[1]),
                ),
            )
        )

    def join_payload(self, a, b):
        return self._canonical(tuple(a) + tuple(b))

    def meet_payload(self, a, b):
        crossed = [
            (self.d1.meet_payload(x1, x2), self.d2.meet_payload(y1, y2))
            for (x1, y1) in a
            for (x2, y2) in b
        ]
        return self._canonical(crossed)

    def bottom_payload(self):
        return ()

    def top_payload(self):
        return ((self.d1.top_payload(), self.d2.top_payload()),)

    def evaluate_payload(self, pairs, z):
        return evaluate(self.d1, self.d2, pairs, z)

    def parse_payload(self, text: str):
        s = text.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise AnnotationSyntaxError(f"compound literal must be {{...}}: {text!r}")
        body = s[1:-1].strip()
        pairs = []
        for chunk in _split_pairs(body):
            inner = chunk.strip()
            if not (inner.startswith("<") and inner.endswith(">")):
                raise AnnotationSyntaxError(f"compound pair must be <...>: {chunk!r}")
            left, right = _split_components(inner[1:-1])
            pairs.append(
                (self.d1.parse_payload(left), self.d2.parse_payload(right))
            )
        return self._canonical(pairs)

    def format_payload(self, payload) -> str:
        inner = ",".join(
            f"<{self.d1.format_payload(x)},{self.d2.format_payload(y)}>"
            for x, y in payload
        )
        return "{" + inner + "}"

    def validate_payload(self, payload):
        pairs = [
            (self.d1.validate_payload(x), self.d2.validate_payload(y))
            for x, y in payload
        ]
        return self._canonical(pairs)

    def random_payload(self, rng):
        pairs = [
            (self.d1.random_payload(rng), self.d2.random_payload(rng))
            for _ in range(rng.randint(0, 2))
        ]
        return self._canonical(pairs)

    def sort_key(self, payload) -> tuple:
        return (len(payload), self.format_payload(payload))


def _split_pairs(body: str) -> list[str]:
    if not body:
        return []
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch in "<{[(":
            depth += 1
        elif ch in ">}])":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def _split_components(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch in "<{[(":
            depth += 1
        elif ch in ">}])":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i].strip(), body[i + 1 :].strip()
    raise AnnotationSyntaxError(f"compound pair needs two components: <{body}>")


def quasihomomorphism_suite(
    domain: CompoundDomain, trials: int = 100, seed: int = 0
) -> AxiomReport:
    """Property checks specific to compound domains: the two
    quasihomomorphism bounds, antitonicity, and soundness/idempotence of
    normalisation on sampled pair sets."""
    d1, d2 = domain.d1, domain.d2
    rng = random.Random(seed)
    report = AxiomReport(domain=domain.name, seed=seed, exhaustive=False)

    def sample_raw() -> list[Pair]:
        return [
            (d1.random_payload(rng), d2.random_payload(rng))
            for _ in range(rng.randint(1, 3))
        ]

    def run(name: str, check) -> None:
        counterexample = None
        count = 0
        for _ in range(trials):
            count += 1
            failure = check()
            if failure is not None:
                counterexample = failure
                break
        report.checks.append(AxiomCheck(name, counterexample is None, count, counterexample))

    def check_quasi() -> str | None:
        pairs = sample_raw()
        z1, z2 = d1.random_payload(rng), d1.random_payload(rng)
        fz1 = evaluate(d1, d2, pairs, z1)
        fz2 = evaluate(d1, d2, pairs, z2)
        fj = evaluate(d1, d2, pairs, d1.join_payload(z1, z2))
        fm = evaluate(d1, d2, pairs, d1.meet_payload(z1, z2))
        if not d2.leq_payload(d2.meet_payload(fz1, fz2), fj):
            return f"join bound fails on {pairs} at {z1}, {z2}"
        if not d2.leq_payload(d2.join_payload(fz1, fz2), fm):
            return f"meet bound fails on {pairs} at {z1}, {z2}"
        return None

    def check_antitone() -> str | None:
        pairs = sample_raw()
        z1 = d1.random_payload(rng)
        z2 = d1.join_payload(z1, d1.random_payload(rng))  # z1 <= z2
        if not d2.leq_payload(
            evaluate(d1, d2, pairs, z2), evaluate(d1, d2, pairs, z1)
        ):
            return f"antitone fails on {pairs} at {z1} <= {z2}"
        return None

    def check_sound() -> str | None:
        pairs = sample_raw()
        normal = normalise(d1, d2, pairs)
        probe = list(generated_sublattice(d1, [x for x, _ in pairs]))
        probe.append(d1.random_payload(rng))
        for z in probe:
            if evaluate(d1, d2, pairs, z) != evaluate(d1, d2, normal, z):
                return f"normalise changes the function of {pairs} at {z}"
        return None

    def check_idempotent() -> str | None:
        pairs = sample_raw()
        normal = normalise(d1, d2, pairs)
        if normalise(d1, d2, normal) != normal:
            return f"normalise not idempotent on {pairs}"
        return None

    run("quasihomomorphism bounds", check_quasi)
    run("antitone", check_antitone)
    run("normalisation preserves the function", check_sound)
    run("normalisation idempotent", check_idempotent)
    return report
