"""Open-form expansion of rational generating functions.

Everything that needs coefficients of a closed form goes through
:func:`expand_ogf`, which runs the division recurrence

    a_n = (b_n - sum_{k=1}^{min(u, n)} c_k a_{n-k}) / c_0

for numerator b and denominator c of degree u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ramanujan_ogf.exact_arith import RationalLike, rat
from ramanujan_ogf.series import (
    ONE_MINUS_Z,
    ONE_PLUS_Z,
    Polynomial,
    RationalOGF,
    TruncatedSeries,
    poly_mul,
    poly_pow,
)


@dataclass(frozen=True)
class ExpansionRequest:
    ogf: RationalOGF
    terms: int

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError(f"terms must be >= 1, got {self.terms}")


def expand_ogf(req: ExpansionRequest | RationalOGF, terms: int | None = None) -> TruncatedSeries:
    """Coefficients a_0 .. a_{terms-1} of ``num/den``.

    Accepts either an :class:`ExpansionRequest` or ``(ogf, terms)``.
    """
    if isinstance(req, RationalOGF):
        if terms is None:
            raise TypeError("terms is required when passing a RationalOGF")
        req = ExpansionRequest(req, terms)
    elif terms is not None:
        raise TypeError("terms is already part of the ExpansionRequest")

    b = req.ogf.num
    c = req.ogf.den.coeffs
    c0 = c[0] if c else Fraction(0)
    if c0 == 0:
        raise ZeroDivisionError("denominator constant term c_0 must be nonzero")
    u = len(c) - 1
    a: list[Fraction] = []
    for n in range(req.terms):
        acc = b.coeff(n)
        for k in range(1, min(u, n) + 1):
            acc -= c[k] * a[n - k]
        a.append(acc if c0 == 1 else acc / c0)
    return TruncatedSeries(a)


def deconv_one_minus_z(diffs: Sequence[RationalLike]) -> list[Fraction]:
    """Undo convolution by (1 - z): a_n = b_n + a_{n-1}."""
    out: list[Fraction] = []
    prev = Fraction(0)
    for b in diffs:
        prev = rat(b) + prev
        out.append(prev)
    return out


def deconv_one_plus_z(b: Sequence[RationalLike]) -> list[Fraction]:
    """Undo convolution by (1 + z): a_n = b_n - a_{n-1}."""
    out: list[Fraction] = []
    prev = Fraction(0)
    for x in b:
        prev = rat(x) - prev
        out.append(prev)
    return out


def paired_convolution_tower(pairs: int, terms: int) -> list[list[Fraction]]:
    """Rows obtained from 1, 0, 0, ... by alternating (1-z)^-1 and (1+z)^-1.

    Row 0 is the unit sequence; rows 2m-1 and 2m are the results after the
    m-th (1-z)^-1 and (1+z)^-1 respectively, so the last row expands
    1/((1-z)^pairs (1+z)^pairs).
    """
    if pairs < 1 or terms < 1:
        raise ValueError("pairs and terms must both be >= 1")
    row = [Fraction(1)] + [Fraction(0)] * (terms - 1)
    tower = [row]
    for _ in range(pairs):
        row = deconv_one_minus_z(row)
        tower.append(row)
        row = deconv_one_plus_z(row)
        tower.append(row)
    return tower


def shifted_column_decomposition(
    key: Polynomial, den: Polynomial, terms: int
) -> list[TruncatedSeries]:
    """Expand each nonzero term t_k z^k of ``key`` over ``den`` separately.

    The coefficient-wise sum of the returned series is the expansion of key/den.
    """
    columns = []
    for k, t in enumerate(key.coeffs):
        if t == 0:
            continue
        columns.append(expand_ogf(RationalOGF(Polynomial.monomial(t, k), den), terms))
    return columns


def sum_columns(columns: Sequence[TruncatedSeries], terms: int) -> TruncatedSeries:
    total = TruncatedSeries.zeros(terms - 1)
    for col in columns:
        total = total + col
    return total


def figurate_denominator(m: int) -> Polynomial:
    """(1-z)^m (1+z)^m."""
    return poly_mul(poly_pow(ONE_MINUS_Z, m), poly_pow(ONE_PLUS_Z, m))
