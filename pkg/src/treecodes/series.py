"""Exact-rational truncated power series and the counting sequences.

Two exponential generating functions are computed here, both with exact
Fraction coefficients:

* sqrt(e^x / (2 - e^x)) whose n-th EGF coefficient counts the constrained
  object families (and the bounded regions of the sliced arrangement),
* sqrt((1 + x) / (1 - x)) counting permutations whose left-to-right minima
  all sit at odd positions.

The first sequence is also recomputed through Stirling numbers as
sum_k S(n, k) * p_k, giving an independent arithmetic route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DivisionByZeroConstantTerm,
    NonIntegerCoefficient,
    SqrtConstantTermNotOne,
)


@dataclass(frozen=True)
class Series:
    """Truncated formal power series with exact rational coefficients.

    Binary operations truncate to the smaller order of the two operands.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least a constant term")
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        return cls((Fraction(value),) + (Fraction(0),) * order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _pair(self, other: "Series") -> tuple[int, tuple, tuple]:
        order = min(self.order, other.order)
        return order, self.coeffs[: order + 1], other.coeffs[: order + 1]

    def __add__(self, other: "Series") -> "Series":
        _, a, b = self._pair(other)
        return Series(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "Series") -> "Series":
        _, a, b = self._pair(other)
        return Series(tuple(x - y for x, y in zip(a, b)))

    def __mul__(self, other: "Series") -> "Series":
        order, a, b = self._pair(other)
        out = [Fraction(0)] * (order + 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
        return Series(tuple(out))

    def __truediv__(self, other: "Series") -> "Series":
        order, a, b = self._pair(other)
        if b[0] == 0:
            raise DivisionByZeroConstantTerm("divisor has zero constant term")
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = a[k] - sum(out[i] * b[k - i] for i in range(k))
            out.append(acc / b[0])
        return Series(tuple(out))

    def sqrt(self) -> "Series":
        """Square root with constant term +1; requires coeffs[0] == 1."""
        if self.coeffs[0] != 1:
            raise SqrtConstantTermNotOne(
                f"sqrt needs constant term 1, got {self.coeffs[0]}"
            )
        out = [Fraction(1)]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k] - sum(out[i] * out[k - i] for i in range(1, k))
            out.append(acc / 2)
        return Series(tuple(out))


def exp_x(order: int) -> Series:
    """e^x truncated at the given order (coefficients 1/k!)."""
    return Series(tuple(Fraction(1, math.factorial(k)) for k in range(order + 1)))


def polynomial(values, order: int) -> Series:
    """Series with the given low-order coefficients, padded with zeros."""
    coeffs = [Fraction(0)] * (order + 1)
    for k, v in enumerate(values):
        if k > order:
            break
        coeffs[k] = Fraction(v)
    return Series(tuple(coeffs))


def _egf_integers(series: Series, what: str) -> list[int]:
    out = []
    for k, c in enumerate(series.coeffs):
        value = c * math.factorial(k)
        if value.denominator != 1 or value < 0:
            raise NonIntegerCoefficient(
                f"{what}: {k}! * coefficient {k} is {value}, not a nonnegative integer"
            )
        out.append(int(value))
    return out


def egf_b(order: int) -> list[int]:
    """Counting sequence of the constrained families: n! [x^n] sqrt(e^x/(2-e^x))."""
    e = exp_x(order)
    return _egf_integers((e / (Series.constant(2, order) - e)).sqrt(), "egf_b")


def egf_p(order: int) -> list[int]:
    """Odd-minima permutation counts: n! [x^n] sqrt((1+x)/(1-x))."""
    ratio = polynomial([1, 1], order) / polynomial([1, -1], order)
    return _egf_integers(ratio.sqrt(), "egf_p")


def double_factorial(k: int) -> int:
    """k!! with the empty-product conventions (-1)!! = 0!! = 1."""
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def odd_double_factorial(n: int) -> int:
    """(2n-1)!!, the number of build-tree codes of length n."""
    return double_factorial(2 * n - 1)


def p_closed_form(n: int) -> int:
    """((n-1)!!)^2 for even n, n!!(n-2)!! for odd n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 0:
        return double_factorial(n - 1) ** 2
    return double_factorial(n) * double_factorial(n - 2)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of set partitions of [n] into k blocks."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    if k == n:
        return 1
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def b_via_composition(n: int) -> int:
    """Constrained-family count as sum_k S(n, k) * p_k.

    Grouping an ordered partition by its underlying set partition reduces
    the odd-minima condition to the one-element-per-block case, counted by
    p_k; summing over set partitions gives the full count.
    """
    return sum(stirling2(n, k) * p_closed_form(k) for k in range(n + 1))
