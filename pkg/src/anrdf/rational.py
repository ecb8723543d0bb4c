"""Exact rational scalars with +/- infinity endpoints.

All numeric payloads in the package are `fractions.Fraction`; the two
infinities (used only as temporal interval endpoints) are the float
infinities, which compare correctly against Fraction in both directions.
No other floats are ever allowed in.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]  # float restricted to +/- inf

NEG_INF: float = float("-inf")
POS_INF: float = float("inf")

_DECIMAL_RE = re.compile(r"[+-]?(\d+)(\.\d+)?")
_RATIO_RE = re.compile(r"([+-]?\d+)/(\d+)")


def is_finite(x: Scalar) -> bool:
    return not isinstance(x, float)


def check_scalar(x: Scalar) -> Scalar:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float) and math.isinf(x):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational or infinity: {x!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse `-inf`, `+inf`, an integer, a decimal, or `p/q`."""
    text = text.strip()
    if text in ("-inf", "-INF"):
        return NEG_INF
    if text in ("+inf", "inf", "+INF", "INF"):
        return POS_INF
    m = _RATIO_RE.fullmatch(text)
    if m:
        return Fraction(int(m.group(1)), int(m.group(2)))
    m = _DECIMAL_RE.fullmatch(text)
    if m:
        return Fraction(text)
    raise ValueError(f"not a number: {text!r}")


def format_scalar(x: Scalar) -> str:
    """Canonical rendering: integers bare, terminating decimals as decimals,
    other rationals as `p/q`, infinities as `-inf`/`+inf`."""
    if isinstance(x, float):
        return "+inf" if x > 0 else "-inf"
    if x.denominator == 1:
        return str(x.numerator)
    # Terminating decimal iff the denominator is of the form 2^a * 5^b.
    den = x.denominator
    exp2 = 0
    while den % 2 == 0:
        den //= 2
        exp2 += 1
    exp5 = 0
    while den % 5 == 0:
        den //= 5
        exp5 += 1
    if den != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = max(exp2, exp5)
    scaled = x * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(int(scaled)), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
