"""Backward-difference tables and difference-sequence keys.

Rows are built with t[i][j] = t[i-1][j] - t[i-1][j-1], reading anything left
of column 0 as zero. The first row whose tail is all zeros is the key
<t_0, ..., t_w>_l, and t(z)/(1-z)^l is then a closed form of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Optional, Sequence

from ramanujan_ogf.exact_arith import RationalLike, binomial, format_rational, rat
from ramanujan_ogf.series import ONE_MINUS_Z, Polynomial, RationalOGF, poly_pow


class NotPolynomialLike(ValueError):
    """No difference row with finite support was found within the depth limit."""


@dataclass(frozen=True)
class DifferenceKey:
    values: tuple[Fraction, ...]
    depth: int

    @property
    def w(self) -> int:
        return len(self.values) - 1

    def __str__(self) -> str:
        inner = ",".join(format_rational(v) for v in self.values)
        return f"<{inner}>_{self.depth}"


@dataclass(frozen=True)
class DifferenceMatrix:
    """Aligned rows of equal width.

    For a difference table row 0 is the input; for a partial-sum
    reconstruction row 0 is the key and ``key`` is set.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    key: Optional[DifferenceKey] = field(default=None)

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def __str__(self) -> str:
        return format_matrix(self)


def difference_step(row: Sequence[Fraction]) -> list[Fraction]:
    return [row[j] - (row[j - 1] if j else 0) for j in range(len(row))]


def _finite_support(row: Sequence[Fraction]) -> bool:
    return all(v == 0 for v in row[len(row) // 2 + 1 :])


def _key_prefix(row: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(row)
    while end and row[end - 1] == 0:
        end -= 1
    return tuple(row[:end])


def _as_row(seq: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    row = tuple(rat(v) for v in seq)
    if not row:
        raise ValueError("input sequence is empty")
    return row


def difference_matrix(seq: Sequence[RationalLike], max_depth: int) -> DifferenceMatrix:
    """Difference rows 0..d, stopping at the first row whose tail past the
    half-window is zero (or at ``max_depth``)."""
    if max_depth < 1:
        raise ValueError(f"max_depth must be >= 1, got {max_depth}")
    rows = [_as_row(seq)]
    for _ in range(max_depth):
        rows.append(tuple(difference_step(rows[-1])))
        if _finite_support(rows[-1]):
            break
    return DifferenceMatrix(tuple(rows))


def difference_key(seq: Sequence[RationalLike], max_depth: int) -> DifferenceKey:
    m = difference_matrix(seq, max_depth)
    last = m.rows[-1]
    if m.depth < 1 or not _finite_support(last):
        raise NotPolynomialLike(
            f"not polynomial-like: no finite difference row within depth {max_depth}"
        )
    return DifferenceKey(_key_prefix(last), m.depth)


def row_via_binomial(seq: Sequence[RationalLike], l: int, j: int) -> Fraction:
    """Entry (l, j) of the difference table computed straight from row 0."""
    row = _as_row(seq)
    if l < 0:
        raise ValueError(f"depth must be >= 0, got {l}")
    if not 0 <= j < len(row):
        raise IndexError(f"column {j} outside 0..{len(row) - 1}")
    total = Fraction(0)
    for k in range(min(j, l) + 1):
        term = row[j - k] * binomial(l, k)
        total += -term if k % 2 else term
    return total


def partial_sum_row(row: Sequence[RationalLike]) -> list[Fraction]:
    """Running sums; inverts one difference step."""
    return list(accumulate(rat(v) for v in row))


def key_to_ogf(key: DifferenceKey) -> RationalOGF:
    return RationalOGF(Polynomial(key.values), poly_pow(ONE_MINUS_Z, key.depth))


def partial_sum_matrix(key: DifferenceKey, steps: int, width: int) -> DifferenceMatrix:
    """Rebuild rows upward from the key: row 0 is the key zero-padded to
    ``width`` and each later row is the partial sum of the one before."""
    if width < len(key.values):
        raise ValueError("width is narrower than the key")
    row = tuple(key.values) + (Fraction(0),) * (width - len(key.values))
    rows = [row]
    for _ in range(steps):
        row = tuple(partial_sum_row(row))
        rows.append(row)
    return DifferenceMatrix(tuple(rows), key=key)


def midline_row(matrix: DifferenceMatrix) -> tuple[Fraction, ...]:
    """Row w + 1 of a partial-sum reconstruction from <t_0..t_w>."""
    if matrix.key is None:
        raise ValueError("midline is defined only for a partial-sum reconstruction")
    idx = matrix.key.w + 1
    if idx > matrix.depth:
        raise ValueError(f"matrix has {matrix.depth} partial-sum rows, need {idx}")
    return matrix.rows[idx]


def format_matrix(matrix: DifferenceMatrix, ellipsis: bool = True) -> str:
    cells = [[format_rational(v) for v in row] for row in matrix.rows]
    width = max(len(c) for row in cells for c in row)
    lines = []
    for row in cells:
        line = " ".join(c.rjust(width) for c in row)
        lines.append(line + " ..." if ellipsis else line)
    return "\n".join(lines)
