"""Exact rational values.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator over arbitrary-precision ints, so it is used directly as the
value type of every index.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Literal

Rational = Fraction

Comparison = Literal["less", "equal", "greater"]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(a: Rational, b: Rational, op: str) -> Rational:
    """Apply ``op`` (add, sub, mul, div) to two rationals.

    Division by zero raises ``ZeroDivisionError``.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"rational division by zero: {a}/{b}")
    return Fraction(fn(Fraction(a), Fraction(b)))


def rational_cmp(a: Rational, b: Rational) -> Comparison:
    if a < b:
        return "less"
    if a > b:
        return "greater"
    return "equal"


_HARMONIC = [Fraction(0)]


def harmonic(n: int) -> Rational:
    """Harmonic number 1 + 1/2 + ... + 1/n, defined for n >= 1."""
    if n < 1:
        raise ValueError(f"harmonic number needs n >= 1, got {n}")
    while len(_HARMONIC) <= n:
        k = len(_HARMONIC)
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, k))
    return _HARMONIC[n]


def format_rational(x: Rational) -> str:
    """Render as ``"numerator/denominator"``; integers keep the ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(int(num))
    return Fraction(int(num), int(den))


def approx(x: Rational) -> str:
    """Decimal rendering to 15 significant digits, always with a decimal point."""
    s = f"{float(x):.15g}"
    if not any(ch in s for ch in ".einf"):
        s += ".0"
    return s
