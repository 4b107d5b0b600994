from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramanujan_ogf.exact_arith import (
    binomial,
    format_rational,
    parse_rational,
    parse_rational_list,
    rat_add,
    rat_div,
    rat_mul,
)

from conftest import assert_reduced, small_fractions


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (F(1, 2), F(1, 3), F(5, 6)),
        (F(1, 12), F(-1, 12), F(0)),
        (F(1, 120), F(1, 120), F(1, 60)),
    ],
)
def test_rat_add(a, b, expected):
    out = rat_add(a, b)
    assert out == expected
    assert_reduced(out)


def test_zero_is_canonical():
    z = rat_add(F(1, 12), F(-1, 12))
    assert (z.numerator, z.denominator) == (0, 1)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (F(2, 3), F(3, 4), F(1, 2)),
        (F(7, 5), F(0), F(0)),
        (F(-1, 12), F(-3), F(1, 4)),
    ],
)
def test_rat_mul(a, b, expected):
    out = rat_mul(a, b)
    assert out == expected
    assert_reduced(out)


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        rat_div(F(1, 3), F(0))


@given(small_fractions(), small_fractions(), small_fractions())
def test_field_laws(a, b, c):
    assert rat_add(a, b) == rat_add(b, a)
    assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))
    for x in (rat_add(a, b), rat_mul(a, b), rat_mul(a, rat_add(b, c))):
        assert_reduced(x)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


@pytest.mark.parametrize("n, k", [(-1, 0), (3, -2)])
def test_binomial_rejects_negative(n, k):
    with pytest.raises(ValueError):
        binomial(n, k)


@pytest.mark.parametrize("x, text", [(F(-1, 12), "-1/12"), (F(6), "6"), (F(0), "0")])
def test_text_form(x, text):
    assert format_rational(x) == text
    assert parse_rational(text) == x


def test_parse_reduces():
    assert parse_rational("2/4") == F(1, 2)
    assert parse_rational_list("1,-2/3, 4") == [F(1), F(-2, 3), F(4)]


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1.5", "1/2/3"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(st.integers(), st.integers(1, 10**6))
def test_text_round_trip(p, q):
    x = F(p, q)
    assert parse_rational(format_rational(x)) == x
