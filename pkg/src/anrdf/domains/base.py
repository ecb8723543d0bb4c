"""Annotation-domain contract.

An annotation domain is an idempotent commutative semiring
``(L, join, meet, bottom, top)`` whose join is top-annihilating.  The join
induces a partial order (``a <= b`` iff ``a join b == b``) under which join
combines evidence about one statement and meet conjoins evidence across
rule premises.

Every concrete domain supplies a canonical payload representation so that
semantic equality of annotation values is structural equality of payloads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from ..errors import DomainMismatchError


class Domain:
    """Base class for annotation domains.

    Subclasses implement the payload-level semiring operations plus the
    codec hooks (parse/format) and a seeded value generator used by the
    axiom-checking harness and the document generators.
    """

    name: str = "abstract"
    #: True iff meet is the greatest lower bound of the induced order,
    #: i.e. leq(z,x) and leq(z,y) iff leq(z, meet(x,y)).
    is_lattice: bool = False

    # -- semiring operations on payloads ------------------------------------

    def join_payload(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def meet_payload(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def leq_payload(self, a: Any, b: Any) -> bool:
        # Induced order; domains may override with a direct test.
        return self.join_payload(a, b) == b

    def bottom_payload(self) -> Any:
        raise NotImplementedError

    def top_payload(self) -> Any:
        raise NotImplementedError

    # -- codec hooks ---------------------------------------------------------

    def parse_payload(self, text: str) -> Any:
        raise NotImplementedError

    def format_payload(self, payload: Any) -> str:
        raise NotImplementedError

    def validate_payload(self, payload: Any) -> Any:
        """Return the canonical form of `payload`, raising on junk."""
        raise NotImplementedError

    # -- support for sampling and ordering ------------------------------------

    def random_payload(self, rng) -> Any:
        raise NotImplementedError

    def enumerate_payloads(self) -> Sequence[Any] | None:
        """All payloads for finite domains (enables exhaustive checking)."""
        return None

    def sort_key(self, payload: Any) -> tuple:
        """Linearization key used by ORDERBY on annotation values."""
        return (self.format_payload(payload),)

    def lift_operand(self, value: Any) -> Any | None:
        """Best-effort payload for a bare query operand (a number, an
        IRI lexical) compared against this domain's values; None when
        the operand has no reading here."""
        return None

    # -- value-level convenience ----------------------------------------------

    def value(self, payload: Any) -> "AnnotationValue":
        return AnnotationValue(self, self.validate_payload(payload))

    def parse(self, text: str) -> "AnnotationValue":
        return AnnotationValue(self, self.parse_payload(text))

    @property
    def bottom(self) -> "AnnotationValue":
        return AnnotationValue(self, self.bottom_payload())

    @property
    def top(self) -> "AnnotationValue":
        return AnnotationValue(self, self.top_payload())

    def random_value(self, rng) -> "AnnotationValue":
        return AnnotationValue(self, self.random_payload(rng))

    def __repr__(self) -> str:  # pragma: no cover
        return f"<domain {self.name}>"


@dataclass(frozen=True)
class AnnotationValue:
    """A domain-tagged element of some L, in canonical form.

    Instances are immutable and hashable; equality is structural equality
    of (domain name, payload), which by the canonical-form requirement
    coincides with semantic equality.
    """

    domain: Domain
    payload: Any

    def _check(self, other: "AnnotationValue") -> None:
        if self.domain.name != other.domain.name:
            raise DomainMismatchError(
                f"cannot combine {self.domain.name} with {other.domain.name}"
            )

    def join(self, other: "AnnotationValue") -> "AnnotationValue":
        self._check(other)
        return AnnotationValue(
            self.domain, self.domain.join_payload(self.payload, other.payload)
        )

    def meet(self, other: "AnnotationValue") -> "AnnotationValue":
        self._check(other)
        return AnnotationValue(
            self.domain, self.domain.meet_payload(self.payload, other.payload)
        )

    def leq(self, other: "AnnotationValue") -> bool:
        self._check(other)
        return self.domain.leq_payload(self.payload, other.payload)

    @property
    def is_bottom(self) -> bool:
        return self.payload == self.domain.bottom_payload()

    @property
    def is_top(self) -> bool:
        return self.payload == self.domain.top_payload()

    def serialize(self) -> str:
        return self.domain.format_payload(self.payload)

    def sort_key(self) -> tuple:
        return self.domain.sort_key(self.payload)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnnotationValue):
            return NotImplemented
        return self.domain.name == other.domain.name and self.payload == other.payload

    def __hash__(self) -> int:
        return hash((self.domain.name, self.payload))

    def __repr__(self) -> str:
        return f"{self.domain.name}:{self.serialize()}"


def join_all(values: Iterable[AnnotationValue], domain: Domain) -> AnnotationValue:
    """Fold join over `values`; the empty fold is bottom."""
    acc = domain.bottom
    for v in values:
        acc = acc.join(v)
    return acc


def meet_all(values: Iterable[AnnotationValue], domain: Domain) -> AnnotationValue:
    """Fold meet over `values`; the empty fold is top."""
    acc = domain.top
    for v in values:
        acc = acc.meet(v)
    return acc
