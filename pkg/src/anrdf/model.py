"""Terms, triples, and the annotated triple store.

A graph keeps at most one annotation per triple: inserting a triple that
is already present joins the new annotation into the stored one (the
destructive generalisation step), and bottom-annotated triples are never
stored at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .domains import AnnotationValue, Domain
from .errors import AnrdfError, DomainMismatchError

IRI = "iri"
LITERAL = "literal"
SKOLEM = "skolem"


@dataclass(frozen=True)
class Term:
    kind: str  # iri | literal | skolem
    lexical: str

    def sort_key(self) -> tuple[str, str]:
        return (self.kind, self.lexical)

    def __repr__(self) -> str:
        if self.kind == LITERAL:
            return f'"{self.lexical}"'
        if self.kind == SKOLEM:
            return f"_:{self.lexical}"
        return self.lexical


def iri(lexical: str) -> Term:
    return Term(IRI, lexical)


def literal(lexical: str) -> Term:
    return Term(LITERAL, lexical)


def skolem(label: str, graph_id: str = "") -> Term:
    """Deterministic replacement for a blank-node label.

    `graph_id` namespaces labels when graphs from several documents must
    coexist; the default keeps serialisation round-trips exact.
    """
    return Term(SKOLEM, f"{graph_id}:{label}" if graph_id else label)


# The rho-df vocabulary, identified by the full RDF(S) IRIs.
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"

TYPE = iri(RDF_NS + "type")
SP = iri(RDFS_NS + "subPropertyOf")
SC = iri(RDFS_NS + "subClassOf")
DOM = iri(RDFS_NS + "domain")
RANGE = iri(RDFS_NS + "range")

RHO_DF = {SP, SC, TYPE, DOM, RANGE}


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if self.predicate.kind == LITERAL:
            raise AnrdfError(f"predicate must not be a literal: {self.predicate!r}")

    def sort_key(self):
        return (
            self.subject.sort_key(),
            self.predicate.sort_key(),
            self.object.sort_key(),
        )

    def __repr__(self) -> str:
        return f"({self.subject!r} {self.predicate!r} {self.object!r})"


@dataclass(frozen=True)
class AnnotatedTriple:
    triple: Triple
    annotation: AnnotationValue


class FrozenGraphError(AnrdfError):
    pass


class AnnotatedGraph:
    """A finite set of annotated triples over one annotation domain."""

    def __init__(self, domain: Domain):
        self.domain = domain
        self._statements: dict[Triple, AnnotationValue] = {}
        self._by_predicate: dict[Term, set[Triple]] = {}
        self._frozen = False
        self._sorted_cache: list[tuple[Triple, AnnotationValue]] | None = None

    # -- mutation --------------------------------------------------------

    def insert(self, t: Triple, value: AnnotationValue) -> bool:
        """Add t with `value`, joining into any stored annotation.

        Returns True iff the stored annotation strictly increased.
        Bottom values are ignored entirely.
        """
        if self._frozen:
            raise FrozenGraphError("graph is frozen")
        if value.domain.name != self.domain.name:
            raise DomainMismatchError(
                f"graph over {self.domain.name} got a {value.domain.name} value"
            )
        if value.is_bottom:
            return False
        stored = self._statements.get(t)
        if stored is None:
            self._statements[t] = value
            self._by_predicate.setdefault(t.predicate, set()).add(t)
            self._sorted_cache = None
            return True
        merged = stored.join(value)
        if merged == stored:
            return False
        self._statements[t] = merged
        self._sorted_cache = None
        return True

    def freeze(self) -> "AnnotatedGraph":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def copy(self) -> "AnnotatedGraph":
        clone = AnnotatedGraph(self.domain)
        clone._statements = dict(self._statements)
        clone._by_predicate = {p: set(ts) for p, ts in self._by_predicate.items()}
        return clone

    # -- queries ---------------------------------------------------------

    def get(self, t: Triple) -> AnnotationValue | None:
        return self._statements.get(t)

    def entails(self, t: Triple, value: AnnotationValue) -> bool:
        """True iff some stored annotation for t subsumes `value`."""
        if value.is_bottom:
            return True
        stored = self._statements.get(t)
        return stored is not None and value.leq(stored)

    def __len__(self) -> int:
        return len(self._statements)

    def __contains__(self, t: Triple) -> bool:
        return t in self._statements

    def statements(self) -> list[tuple[Triple, AnnotationValue]]:
        """Statements in (s, p, o) order; cached once frozen."""
        if self._sorted_cache is None:
            ordered = sorted(self._statements.items(), key=lambda kv: kv[0].sort_key())
            if not self._frozen:
                return ordered
            self._sorted_cache = ordered
        return self._sorted_cache

    def __iter__(self) -> Iterator[tuple[Triple, AnnotationValue]]:
        return iter(self.statements())

    def with_predicate(self, p: Term) -> set[Triple]:
        return self._by_predicate.get(p, set())

    def match(
        self, s: Term | None, p: Term | None, o: Term | None
    ) -> Iterator[tuple[Triple, AnnotationValue]]:
        """All statements agreeing with the given fixed positions."""
        if p is not None:
            candidates: Iterator[Triple] = iter(sorted(self.with_predicate(p), key=Triple.sort_key))
        else:
            candidates = (t for t, _ in self.statements())
        for t in candidates:
            if s is not None and t.subject != s:
                continue
            if o is not None and t.object != o:
                continue
            yield t, self._statements[t]

    def triple_set(self) -> set[Triple]:
        return set(self._statements)
