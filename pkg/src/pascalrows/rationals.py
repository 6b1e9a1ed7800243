"""Exact rational arithmetic.

Every weight and coefficient in this package is a `fractions.Fraction`:
arbitrary-precision, always in lowest terms with a positive denominator,
zero stored uniquely as 0/1, immutable and hashable.  This module pins the
construction, dispatch, and wire format used by the rest of the package.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_OPERATIONS = {
    "add": lambda a, b: a + b,
    "subtract": lambda a, b: a - b,
    "multiply": lambda a, b: a * b,
    "divide": lambda a, b: a / b,
}


def rational(numerator: int, denominator: int = 1) -> Fraction:
    """Build the normalized fraction numerator/denominator.

    The sign ends up on the numerator.  A zero denominator raises
    ZeroDivisionError.
    """
    return Fraction(numerator, denominator)


def rational_arithmetic(a: Fraction, b: Fraction, operation: str) -> Fraction:
    """Apply one of add/subtract/multiply/divide exactly.

    Dividing by zero raises ZeroDivisionError; results are always in
    lowest terms (no rounding anywhere).
    """
    try:
        op = _OPERATIONS[operation]
    except KeyError:
        raise ValueError(f"unknown operation {operation!r}") from None
    return op(a, b)


def format_rational(q: Fraction) -> str:
    """Serialize as "num/den" in lowest terms, plain "num" for integers."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational."""
    return Fraction(text)
