"""Truncated formal power series in a formal parameter over a unital carrier.

A series holds coefficients 0..N in some algebra; all arithmetic truncates at
order N, which makes every computation exact in the graded sense. The carrier
is any object with ``zero`` and ``one`` attributes whose elements support
``+``, ``-``, ``*`` and left multiplication by ``Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "LambdaSeries",
    "series_mul",
    "series_log",
    "series_exp",
    "series_inverse",
]


class LambdaSeries:
    """Coefficient vector c_0 .. c_N of a series sum_k c_k lambda^k."""

    __slots__ = ("carrier", "coeffs")

    def __init__(self, carrier, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the order-0 coefficient")
        self.carrier = carrier
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, carrier, order: int) -> "LambdaSeries":
        return cls(carrier, [carrier.zero] * (order + 1))

    @classmethod
    def one(cls, carrier, order: int) -> "LambdaSeries":
        return cls(carrier, [carrier.one] + [carrier.zero] * order)

    @classmethod
    def term(cls, carrier, k: int, value, order: int) -> "LambdaSeries":
        """The series value * lambda^k."""
        if not 0 <= k <= order:
            raise ValueError(f"term index {k} outside order {order}")
        coeffs = [carrier.zero] * (order + 1)
        coeffs[k] = value
        return cls(carrier, coeffs)

    def coefficient(self, k: int):
        return self.coeffs[k]

    def _match(self, other: "LambdaSeries") -> None:
        if self.carrier is not other.carrier:
            raise ValueError("series carriers differ")
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other: "LambdaSeries") -> "LambdaSeries":
        self._match(other)
        return LambdaSeries(self.carrier, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "LambdaSeries") -> "LambdaSeries":
        self._match(other)
        return LambdaSeries(self.carrier, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "LambdaSeries":
        return LambdaSeries(self.carrier, [-a for a in self.coeffs])

    def __rmul__(self, scalar) -> "LambdaSeries":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return LambdaSeries(self.carrier, [q * a for a in self.coeffs])

    def __mul__(self, other: "LambdaSeries") -> "LambdaSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.carrier is other.carrier and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        return "LambdaSeries[" + "; ".join(str(c) for c in self.coeffs) + "]"


def series_mul(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Cauchy product truncated at the common order."""
    a._match(b)
    n = a.order
    out = []
    for k in range(n + 1):
        acc = a.carrier.zero
        for i in range(k + 1):
            acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return LambdaSeries(a.carrier, out)


def series_log(a: LambdaSeries) -> LambdaSeries:
    """log(a) = sum_{k>=1} (-1)^{k+1} (a-1)^k / k, requires a_0 = 1."""
    if a.coeffs[0] != a.carrier.one:
        raise ValueError("series_log needs unit constant term")
    n = a.order
    u = a - LambdaSeries.one(a.carrier, n)
    out = LambdaSeries.zero(a.carrier, n)
    power = u
    for k in range(1, n + 1):
        sign = 1 if k % 2 == 1 else -1
        out = out + Fraction(sign, k) * power
        if k < n:
            power = power * u
    return out


def series_exp(a: LambdaSeries) -> LambdaSeries:
    """exp(a) = sum_{k>=0} a^k / k!, requires a_0 = 0."""
    if a.coeffs[0] != a.carrier.zero:
        raise ValueError("series_exp needs zero constant term")
    n = a.order
    out = LambdaSeries.one(a.carrier, n)
    power = a
    for k in range(1, n + 1):
        out = out + Fraction(1, math.factorial(k)) * power
        if k < n:
            power = power * a
    return out


def series_inverse(a: LambdaSeries) -> LambdaSeries:
    """Multiplicative inverse of a series with unit constant term."""
    if a.coeffs[0] != a.carrier.one:
        raise ValueError("series_inverse needs unit constant term")
    n = a.order
    inv = [a.carrier.one]
    for k in range(1, n + 1):
        acc = a.carrier.zero
        for i in range(1, k + 1):
            acc = acc + a.coeffs[i] * inv[k - i]
        inv.append(-acc)
    return LambdaSeries(a.carrier, inv)
