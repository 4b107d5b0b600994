from fractions import Fraction as F

import pytest
from hypothesis import given

from ramanujan_ogf.series import (
    ONE_MINUS_Z,
    ONE_PLUS_Z,
    Polynomial,
    RationalOGF,
    TruncatedSeries,
    format_polynomial,
    poly_add,
    poly_eval,
    poly_mul,
    poly_pow,
    poly_substitute_neg,
    series_equal,
)

from conftest import small_fractions, small_polys

P = Polynomial


def brute_force_product(p, q):
    """Coefficient of z^n is the sum over all i + j == n."""
    out = {}
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out.get(i + j, 0) + a * b
    return [out[n] for n in range(max(out) + 1)]


def test_trimming_and_zero():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0]) == P() == P([0, 0])
    assert P().degree == -1
    assert P([0, 0, 3]).degree == 2


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (P([1, 4, 1]), P([-1, -4, -1]), P()),
        (P([1, 1]), P([1, -1]), P([2])),
        (P([1, 4, 1]), P(), P([1, 4, 1])),
    ],
)
def test_poly_add(p, q, expected):
    assert poly_add(p, q) == expected


def test_poly_mul():
    assert poly_mul(ONE_MINUS_Z, ONE_PLUS_Z) == P([1, 0, -1])
    p = P([1])
    for _ in range(4):
        p = poly_mul(p, ONE_PLUS_Z)
    assert p == P([1, 4, 6, 4, 1])


def test_poly_mul_derived():
    expected = brute_force_product([1, 4, 1], [1, 4, 6, 4, 1])
    assert expected == [1, 8, 23, 32, 23, 8, 1]
    assert poly_mul(P([1, 4, 1]), poly_pow(ONE_PLUS_Z, 4)) == P(expected)


@pytest.mark.parametrize(
    "base, e, expected",
    [
        (ONE_MINUS_Z, 0, P([1])),
        (ONE_PLUS_Z, 2, P([1, 2, 1])),
        (ONE_MINUS_Z, 4, P([1, -4, 6, -4, 1])),
    ],
)
def test_poly_pow(base, e, expected):
    assert poly_pow(base, e) == expected


@pytest.mark.parametrize(
    "p, expected",
    [
        (P([1, 4, 1]), P([1, -4, 1])),
        (P([1, 26, 66, 26, 1]), P([1, -26, 66, -26, 1])),
        (P(), P()),
    ],
)
def test_substitute_neg(p, expected):
    assert poly_substitute_neg(p) == expected


def test_poly_eval():
    assert poly_eval(P([1, -4, 1]), 1) == -2
    assert poly_eval(P([1, -26, 66, -26, 1]), 1) == 16
    assert poly_eval(P([F(3, 7), 5, 9]), 0) == F(3, 7)


@given(small_polys(), small_polys(), small_polys())
def test_ring_laws(p, q, r):
    assert poly_mul(p, q) == poly_mul(q, p)
    assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))


@given(small_polys())
def test_substitute_neg_is_involution(p):
    assert poly_substitute_neg(poly_substitute_neg(p)) == p


@given(small_polys(), small_polys(), small_fractions())
def test_eval_is_multiplicative(p, q, x):
    assert poly_eval(poly_mul(p, q), x) == poly_eval(p, x) * poly_eval(q, x)


@given(small_polys(), small_polys())
def test_degree_of_product(p, q):
    if not p.is_zero() and not q.is_zero():
        assert poly_mul(p, q).degree == p.degree + q.degree


def test_series_equal():
    assert series_equal(TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 2, 3]))
    assert not series_equal(TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 2, 4]))
    with pytest.raises(ValueError):
        series_equal(TruncatedSeries(range(6)), TruncatedSeries(range(7)))


def test_truncated_series_keeps_trailing_zeros():
    s = TruncatedSeries([1, 0, 0])
    assert s.order == 2
    assert len(s) == 3


def test_rational_ogf_requires_nonzero_constant():
    RationalOGF(P([1]), P([2, 1]))
    with pytest.raises(ZeroDivisionError):
        RationalOGF(P([1]), P([0, 1]))


@pytest.mark.parametrize(
    "p, text",
    [
        (P([1, 4, 1]), "1+4z+z^2"),
        (P([0, 1, 0, 4, 0, 1]), "z+4z^3+z^5"),
        (P([1, -1]), "1-z"),
        (P([F(-1, 2), 0, 3]), "-1/2+3z^2"),
        (P(), "0"),
    ],
)
def test_format(p, text):
    assert format_polynomial(p) == text
