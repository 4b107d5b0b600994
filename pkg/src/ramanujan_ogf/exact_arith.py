"""Exact scalars.

``fractions.Fraction`` already keeps itself in lowest terms with a positive
denominator and represents zero as 0/1, so it serves directly as the
rational type. The helpers here add the text format used on the command
line and a binomial that refuses negative arguments.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def rat(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return a / b


def binomial(n: int, k: int) -> int:
    """C(n, k) for natural n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}): arguments must be non-negative")
    return math.comb(n, k)


def format_rational(x: Fraction) -> str:
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (integers only, no decimals)."""
    token = text.strip()
    num, sep, den = token.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list of "p/q" tokens."""
    if not text.strip():
        raise ValueError("empty coefficient list")
    return [parse_rational(tok) for tok in text.split(",")]


def format_rational_list(values: Iterable[Fraction]) -> str:
    return ",".join(format_rational(v) for v in values)
