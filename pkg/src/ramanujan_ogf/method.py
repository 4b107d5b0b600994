"""Ramanujan's subtraction trick for sums of s-th powers, done in closed form.

With g = U/(1-z)^(s+1) the OGF of (n+1)^s, h = L/((1-z)^(s+1)(1+z)^(s+1)) the
same powers spread onto odd indices, and k = X/(1+z)^(s+1) the alternating
powers, one has g - 2^(s+1) h = k. Reading g and h as "the same constant C"
at z = 1 gives C - 2^(s+1) C = X(1)/2^(s+1), so

    C = X(1) / (2^(s+1) (1 - 2^(s+1))),

which is zeta(-s). U, L and X are built from row s of the Eulerian triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ramanujan_ogf.combinatorics import eulerian_row, zeta_neg
from ramanujan_ogf.deconvolution import expand_ogf, figurate_denominator
from ramanujan_ogf.series import (
    ONE_MINUS_Z,
    ONE_PLUS_Z,
    Polynomial,
    RationalOGF,
    TruncatedSeries,
    poly_eval,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_substitute_neg,
)


def _check_s(s: int) -> None:
    if isinstance(s, bool) or not isinstance(s, int):
        raise TypeError(f"s must be an integer, got {s!r}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")


def _check_order(order: int) -> None:
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")


def upsilon_poly(s: int) -> Polynomial:
    """Eulerian row s as coefficients of z^0 .. z^(s-1)."""
    _check_s(s)
    return Polynomial(eulerian_row(s).values)


def lambda_poly(s: int) -> Polynomial:
    """Eulerian row s placed on the odd powers z^1, z^3, ..., z^(2s-1)."""
    _check_s(s)
    coeffs = [0] * (2 * s)
    for j, v in enumerate(eulerian_row(s).values):
        coeffs[2 * j + 1] = v
    return Polynomial(coeffs)


def xi_poly(s: int) -> Polynomial:
    _check_s(s)
    return poly_substitute_neg(upsilon_poly(s))


def g_ogf(s: int) -> RationalOGF:
    return RationalOGF(upsilon_poly(s), poly_pow(ONE_MINUS_Z, s + 1))


def h_ogf(s: int) -> RationalOGF:
    return RationalOGF(lambda_poly(s), figurate_denominator(s + 1))


def k_ogf(s: int) -> RationalOGF:
    return RationalOGF(xi_poly(s), poly_pow(ONE_PLUS_Z, s + 1))


def verify_identity(s: int) -> bool:
    """Check U (1+z)^(s+1) - 2^(s+1) L == X (1-z)^(s+1) exactly."""
    _check_s(s)
    lhs = poly_mul(upsilon_poly(s), poly_pow(ONE_PLUS_Z, s + 1)) - poly_scale(
        lambda_poly(s), 2 ** (s + 1)
    )
    rhs = poly_mul(xi_poly(s), poly_pow(ONE_MINUS_Z, s + 1))
    return lhs == rhs


def open_form_rows(s: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """(g, 2^(s+1) h, k) expanded through z^order."""
    _check_s(s)
    _check_order(order)
    terms = order + 1
    g = expand_ogf(g_ogf(s), terms)
    h2 = expand_ogf(h_ogf(s), terms).scale(2 ** (s + 1))
    k = expand_ogf(k_ogf(s), terms)
    return g, h2, k


def verify_open_forms(s: int, order: int = 40) -> bool:
    _check_s(s)
    _check_order(order)
    terms = order + 1
    g = expand_ogf(g_ogf(s), terms)
    h = expand_ogf(h_ogf(s), terms)
    k = expand_ogf(k_ogf(s), terms)
    for n in range(terms):
        power = (n + 1) ** s
        if g[n] != power:
            return False
        if k[n] != (power if n % 2 == 0 else -power):
            return False
        expected_h = ((n + 1) // 2) ** s if n % 2 else 0
        if h[n] != expected_h:
            return False
    return (g - k).coeffs == h.scale(2 ** (s + 1)).coeffs


def ramanujan_constant(s: int) -> Fraction:
    _check_s(s)
    two = 2 ** (s + 1)
    return poly_eval(xi_poly(s), 1) / (two * (1 - two))


@dataclass(frozen=True)
class MethodReport:
    s: int
    order: int
    upsilon: Polynomial
    lambda_: Polynomial
    xi: Polynomial
    identity_holds: bool
    xi_at_one: Fraction
    constant_C: Fraction
    zeta_check: Fraction
    open_form_rows: tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]


def derive_report(s: int, order: int = 8) -> MethodReport:
    _check_s(s)
    _check_order(order)
    xi = xi_poly(s)
    return MethodReport(
        s=s,
        order=order,
        upsilon=upsilon_poly(s),
        lambda_=lambda_poly(s),
        xi=xi,
        identity_holds=verify_identity(s),
        xi_at_one=poly_eval(xi, 1),
        constant_C=ramanujan_constant(s),
        zeta_check=zeta_neg(s),
        open_form_rows=open_form_rows(s, order),
    )
