"""Dense polynomials, truncated power series and rational OGFs over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ramanujan_ogf.exact_arith import RationalLike, format_rational, rat


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in z; ``coeffs[i]`` is the coefficient of z**i.

    Trailing zeros are always trimmed, so the zero polynomial has ``coeffs == ()``
    and equality is plain structural equality.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _trim([rat(c) for c in coeffs]))

    @classmethod
    def monomial(cls, coeff: RationalLike, power: int) -> Polynomial:
        if power < 0:
            raise ValueError("monomial power must be non-negative")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, poly_scale(other, -1))

    def __neg__(self) -> Polynomial:
        return poly_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        return poly_pow(self, e)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __str__(self) -> str:
        return format_polynomial(self)


ZERO = Polynomial()
ONE = Polynomial([1])
ONE_MINUS_Z = Polynomial([1, -1])
ONE_PLUS_Z = Polynomial([1, 1])


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(p.coeff(i) + q.coeff(i) for i in range(n))


def poly_scale(p: Polynomial, c: RationalLike) -> Polynomial:
    c = rat(c)
    return Polynomial(c * a for a in p.coeffs)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def poly_pow(p: Polynomial, e: int) -> Polynomial:
    if e < 0:
        raise ValueError("negative exponent")
    result = ONE
    for _ in range(e):
        result = poly_mul(result, p)
    return result


def poly_substitute_neg(p: Polynomial) -> Polynomial:
    """p(-z)."""
    return Polynomial(-c if i % 2 else c for i, c in enumerate(p.coeffs))


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    x = rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def format_polynomial(p: Polynomial, var: str = "z") -> str:
    """Human form, e.g. ``1+4z+z^2`` or ``-1/2z^3``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{format_rational(mag)}{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of z^0 .. z^order of a formal power series.

    Nothing is trimmed: trailing zeros are data.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        values = tuple(rat(c) for c in coeffs)
        if not values:
            raise ValueError("a truncated series needs at least the z^0 coefficient")
        object.__setattr__(self, "coeffs", values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_orders(self, other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_orders(self, other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def scale(self, c: RationalLike) -> TruncatedSeries:
        c = rat(c)
        return TruncatedSeries(c * a for a in self.coeffs)

    def convolve(self, p: Polynomial) -> TruncatedSeries:
        """Product with a polynomial, truncated to the same order."""
        out = []
        for n in range(len(self.coeffs)):
            out.append(sum((p.coeff(k) * self.coeffs[n - k] for k in range(n + 1)), Fraction(0)))
        return TruncatedSeries(out)

    @classmethod
    def zeros(cls, order: int) -> TruncatedSeries:
        return cls([0] * (order + 1))


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} vs {b.order}")


def series_equal(a: TruncatedSeries, b: TruncatedSeries) -> bool:
    _check_orders(a, b)
    return a.coeffs == b.coeffs


@dataclass(frozen=True)
class RationalOGF:
    """Closed form num(z)/den(z) of an ordinary generating function, den(0) != 0."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.coeff(0) == 0:
            raise ZeroDivisionError("denominator constant term c_0 must be nonzero")

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"
