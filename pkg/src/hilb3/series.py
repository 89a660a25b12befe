"""Truncated integer power series and the generating functions built from them.

Every series carries an explicit truncation order ``N`` (coefficients of
``t^0..t^N``).  Binary operations refuse mismatched orders; use
:meth:`IntSeries.truncate` to bring operands to a common order first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from collections import Counter
from typing import Iterator, Sequence

from .partitions import partition_count

__all__ = [
    "IntSeries",
    "NonUnitSeriesError",
    "aut_order",
    "config_euler",
    "dt_series",
    "euler_series",
    "int_pow",
    "integer_partitions",
    "macmahon_series",
    "mul",
    "stratification_sum",
]


class NonUnitSeriesError(ValueError):
    def __init__(self):
        super().__init__("non-unit series")


@dataclass(frozen=True)
class IntSeries:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], order: int) -> "IntSeries":
        """Pad with zeros or cut to exactly ``order + 1`` coefficients."""
        c = list(coeffs[: order + 1])
        return cls(tuple(c + [0] * (order + 1 - len(c))))

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return IntSeries(self.coefficients[: order + 1])

    def _check(self, other: "IntSeries"):
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} != {other.order}")

    def __add__(self, other: "IntSeries") -> "IntSeries":
        self._check(other)
        return IntSeries(tuple(a + b for a, b in zip(self, other)))

    def __neg__(self) -> "IntSeries":
        return IntSeries(tuple(-a for a in self))

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return self + (-other)

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        return mul(self, other)

    def __pow__(self, k: int) -> "IntSeries":
        return int_pow(self, k)

    def sign_flip(self) -> "IntSeries":
        """Substitute ``t -> -t``."""
        return IntSeries(tuple(c if n % 2 == 0 else -c for n, c in enumerate(self)))

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.coefficients[0] != 1:
            raise NonUnitSeriesError()
        a = self.coefficients
        inv = [1]
        for n in range(1, len(a)):
            inv.append(-sum(a[k] * inv[n - k] for k in range(1, n + 1)))
        return IntSeries(tuple(inv))


def mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order
    x, y = a.coefficients, b.coefficients
    return IntSeries(tuple(sum(x[i] * y[k - i] for i in range(k + 1)) for k in range(n + 1)))


def int_pow(a: IntSeries, k: int) -> IntSeries:
    """``a**k`` by repeated squaring; negative ``k`` needs constant term 1."""
    if k < 0:
        a = a.inverse()
        k = -k
    result = IntSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def macmahon_series(N: int) -> IntSeries:
    """prod_{k=1}^{N} (1 - t^k)^{-k} to order N."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    c = [1] + [0] * N
    for k in range(1, N + 1):
        for _ in range(k):
            # multiply in place by 1 / (1 - t^k)
            for i in range(k, N + 1):
                c[i] += c[i - k]
    return IntSeries(tuple(c))


def euler_series(chi: int, N: int) -> IntSeries:
    """sum_n chi(Hilb^n Y) t^n = M(t)^chi."""
    return int_pow(macmahon_series(N), chi)


def dt_series(chi: int, N: int) -> IntSeries:
    """Degree-zero DT series M(-t)^chi, computed directly from M(-t)."""
    return int_pow(macmahon_series(N).sign_flip(), chi)


# -- stratification by support type --------------------------------------------

def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, reverse lexicographic."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def aut_order(alpha: Sequence[int]) -> int:
    """Order of the group of permutations of the parts of ``alpha`` preserving values."""
    return prod(factorial(m) for m in Counter(alpha).values())


def config_euler(chi: int, r: int) -> int:
    """Euler characteristic of ordered r-tuples of distinct points: chi (chi-1) ... (chi-r+1)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return prod(chi - i for i in range(r))


def stratification_term(chi: int, alpha: Sequence[int]) -> Fraction:
    """Unsigned contribution of the stratum of support type ``alpha``."""
    return (Fraction(config_euler(chi, len(alpha)), aut_order(alpha))
            * prod(partition_count(a) for a in alpha))


def stratification_sum(chi: int, n: int) -> int:
    """(-1)^n sum over support types alpha of n of chi(Y^r_0) / |G_alpha| * prod p_{alpha_i}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = sum((stratification_term(chi, a) for a in integer_partitions(n)), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"stratification sum {total} is not an integer")
    return (-1) ** n * total.numerator
