"""Exact generating-function toolkit for Ramanujan-style divergent sums of powers."""

from ramanujan_ogf.exact_arith import Rational, binomial, format_rational, parse_rational
from ramanujan_ogf.series import Polynomial, RationalOGF, TruncatedSeries
from ramanujan_ogf.combinatorics import (
    alternating_eulerian_sum,
    bernoulli,
    divided_bernoulli,
    eulerian_row,
    zeta_neg,
)
from ramanujan_ogf.method import (
    derive_report,
    lambda_poly,
    ramanujan_constant,
    upsilon_poly,
    verify_identity,
    verify_open_forms,
    xi_poly,
)
from ramanujan_ogf.differences import (
    NotPolynomialLike,
    difference_key,
    difference_matrix,
    key_to_ogf,
    midline_row,
    partial_sum_row,
    row_via_binomial,
)
from ramanujan_ogf.deconvolution import (
    deconv_one_minus_z,
    deconv_one_plus_z,
    expand_ogf,
    paired_convolution_tower,
    shifted_column_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "Rational", "binomial", "format_rational", "parse_rational",
    "Polynomial", "RationalOGF", "TruncatedSeries",
    "alternating_eulerian_sum", "bernoulli", "divided_bernoulli", "eulerian_row", "zeta_neg",
    "derive_report", "lambda_poly", "ramanujan_constant", "upsilon_poly",
    "verify_identity", "verify_open_forms", "xi_poly",
    "NotPolynomialLike", "difference_key", "difference_matrix", "key_to_ogf",
    "midline_row", "partial_sum_row", "row_via_binomial",
    "deconv_one_minus_z", "deconv_one_plus_z", "expand_ogf",
    "paired_convolution_tower", "shifted_column_decomposition",
]
