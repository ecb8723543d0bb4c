"""Fuzzy domains over [0,1] with exact rational degrees.

Join is max in every variant; meet is a configurable t-norm.  The t-norm
choice is part of the domain identifier because it changes the algebra:
only the minimum t-norm makes meet the lattice meet, so only `fuzzy:min`
is admissible as the first component of a compound domain.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import AnnotationSyntaxError
from ..rational import format_scalar, parse_scalar
from .base import Domain

ZERO = Fraction(0)
ONE = Fraction(1)


def tnorm_min(a: Fraction, b: Fraction) -> Fraction:
    return min(a, b)


def tnorm_product(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def tnorm_lukasiewicz(a: Fraction, b: Fraction) -> Fraction:
    return max(ZERO, a + b - ONE)


_TNORMS = {
    "min": (tnorm_min, True),
    "product": (tnorm_product, False),
    "lukasiewicz": (tnorm_lukasiewicz, False),
}


class FuzzyDomain(Domain):
    def __init__(self, tnorm: str = "product"):
        if tnorm not in _TNORMS:
            raise AnnotationSyntaxError(f"unknown t-norm {tnorm!r}")
        self._tnorm, self.is_lattice = _TNORMS[tnorm]
        self.tnorm_name = tnorm
        self.name = f"fuzzy:{tnorm}"

    def join_payload(self, a: Fraction, b: Fraction) -> Fraction:
        return max(a, b)

    def meet_payload(self, a: Fraction, b: Fraction) -> Fraction:
        return self._tnorm(a, b)

    def leq_payload(self, a: Fraction, b: Fraction) -> bool:
        return a <= b

    def bottom_payload(self) -> Fraction:
        return ZERO

    def top_payload(self) -> Fraction:
        return ONE

    def parse_payload(self, text: str) -> Fraction:
        try:
            value = parse_scalar(text)
        except ValueError as exc:
            raise AnnotationSyntaxError(str(exc)) from None
        return self.validate_payload(value)

    def format_payload(self, payload: Fraction) -> str:
        return format_scalar(payload)

    def validate_payload(self, payload) -> Fraction:
        if isinstance(payload, int):
            payload = Fraction(payload)
        if not isinstance(payload, Fraction) or not ZERO <= payload <= ONE:
            raise AnnotationSyntaxError(
                f"fuzzy degree must be a rational in [0,1], got {payload!r}"
            )
        return payload

    def random_payload(self, rng) -> Fraction:
        # Small denominators keep meet/join chains readable in reports.
        den = rng.choice((1, 2, 4, 5, 10, 20))
        return Fraction(rng.randint(0, den), den)

    def sort_key(self, payload: Fraction) -> tuple:
        return (payload,)

    def lift_operand(self, value):
        if isinstance(value, Fraction) and ZERO <= value <= ONE:
            return value
        return None
