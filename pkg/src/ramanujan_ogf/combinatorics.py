"""Eulerian numbers, Bernoulli numbers and zeta at the non-positive integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ramanujan_ogf.exact_arith import binomial


def _require_positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True)
class EulerianRow:
    """Row ``s`` of the Eulerian triangle.

    ``values`` is stored 0-based (``values[j]`` counts permutations of ``s``
    elements with ``j`` ascents); ``at(k)`` gives the 1-based column ``k``
    used when the row is read off as polynomial coefficients.
    """

    s: int
    values: tuple[int, ...]

    def at(self, k: int) -> int:
        if not 1 <= k <= self.s:
            raise IndexError(f"column {k} outside 1..{self.s}")
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@lru_cache(maxsize=None)
def _eulerian_values(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _eulerian_values(n - 1)
    row = []
    for j in range(n):
        left = prev[j] if j < n - 1 else 0
        right = prev[j - 1] if j >= 1 else 0
        row.append((j + 1) * left + (n - j) * right)
    return tuple(row)


def eulerian_row(s: int) -> EulerianRow:
    _require_positive("s", s)
    return EulerianRow(s, _eulerian_values(s))


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = m + 1   (B_1 = +1/2)
    if n == 0:
        return (Fraction(1),)
    prev = _bernoulli_table(n - 1)
    acc = sum((binomial(n + 1, k) * b for k, b in enumerate(prev)), Fraction(0))
    return prev + (Fraction(n + 1 - acc, n + 1),)


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = +1/2."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _bernoulli_table(n)[n]


def divided_bernoulli(n: int) -> Fraction:
    """B_n / n."""
    _require_positive("n", n)
    return bernoulli(n) / n


def alternating_eulerian_sum(s: int) -> Fraction:
    _require_positive("s", s)
    row = eulerian_row(s)
    return Fraction(sum(v if j % 2 == 0 else -v for j, v in enumerate(row.values)))


def zeta_neg(s: int) -> Fraction:
    """zeta(-s) = -B_{s+1}/(s+1) for s >= 0."""
    if isinstance(s, bool) or not isinstance(s, int):
        raise TypeError(f"s must be an integer, got {s!r}")
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    return -divided_bernoulli(s + 1)
