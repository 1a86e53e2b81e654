"""Products of cyclotomic binomials ``unit * prod (t^m - 1)^e_m``.

Monodromy characteristic polynomials of weighted-homogeneous singularities
have this shape, and their degrees grow exponentially in the number of
variables, so they are kept factored and only expanded on request.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_MAX_EXPAND_DEGREE = 10_000
DEFAULT_TRIAL_DIVISION_BOUND = 10**6


class NotAPolynomialError(ArithmeticError):
    pass


class DegreeCapError(ValueError):
    pass


@dataclass(frozen=True)
class LambdaProduct:
    """``unit * prod_m (t^m - 1)^factors[m]`` with zero multiplicities pruned."""

    factors: tuple[tuple[int, int], ...] = ()
    unit: int = 1

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = (), unit: int = 1):
        if unit not in (1, -1):
            raise ValueError(f"unit must be +1 or -1, got {unit}")
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[int, int] = {}
        for m, e in items:
            m, e = int(m), int(e)
            if m < 1:
                raise ValueError(f"binomial exponent must be >= 1, got {m}")
            acc[m] = acc.get(m, 0) + e
        object.__setattr__(self, "factors", tuple(sorted((m, e) for m, e in acc.items() if e != 0)))
        object.__setattr__(self, "unit", unit)

    @classmethod
    def binomial(cls, m: int, e: int = 1) -> LambdaProduct:
        return cls({m: e})

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __mul__(self, other: LambdaProduct) -> LambdaProduct:
        return lp_mul(self, other)

    def __truediv__(self, other: LambdaProduct) -> LambdaProduct:
        return lp_mul(self, other.inverse())

    def __pow__(self, k: int) -> LambdaProduct:
        return LambdaProduct({m: e * k for m, e in self.factors}, self.unit ** (k % 2))

    def inverse(self) -> LambdaProduct:
        return LambdaProduct({m: -e for m, e in self.factors}, self.unit)

    @property
    def degree(self) -> int:
        return lp_degree(self)

    def to_json(self) -> dict:
        return {"unit": self.unit, "factors": [[m, e] for m, e in self.factors]}

    @classmethod
    def from_json(cls, data: Mapping) -> LambdaProduct:
        return cls([(m, e) for m, e in data["factors"]], data["unit"])

    def __str__(self) -> str:
        if not self.factors:
            return "1" if self.unit == 1 else "-1"
        num = [f"(t^{m}-1)" + (f"^{e}" if e > 1 else "") for m, e in self.factors if e > 0]
        den = [f"(t^{m}-1)" + (f"^{-e}" if e < -1 else "") for m, e in self.factors if e < 0]
        s = "*".join(num) or "1"
        if den:
            s += " / (" + "*".join(den) + ")"
        return s if self.unit == 1 else "-" + s


ONE = LambdaProduct()


def lp_mul(p: LambdaProduct, q: LambdaProduct) -> LambdaProduct:
    acc = dict(p.factors)
    for m, e in q.factors:
        acc[m] = acc.get(m, 0) + e
    return LambdaProduct(acc, p.unit * q.unit)


def lp_degree(p: LambdaProduct) -> int:
    return sum(m * e for m, e in p.factors)


def lp_order_at_one(p: LambdaProduct) -> int:
    return sum(e for _, e in p.factors)


def lp_value_at_one(p: LambdaProduct) -> Fraction:
    """Limit at t=1; each (t^m-1)/(t-1) tends to m."""
    if lp_order_at_one(p) != 0:
        raise ValueError(f"order at t=1 is {lp_order_at_one(p)}, value is not finite and nonzero")
    value = Fraction(p.unit)
    for m, e in p.factors:
        value *= Fraction(m) ** e
    return value


def lp_evaluate(p: LambdaProduct, t0: Fraction) -> Fraction:
    t0 = Fraction(t0)
    value = Fraction(p.unit)
    for m, e in p.factors:
        base = t0**m - 1
        if base == 0:
            raise ZeroDivisionError(f"t0^{m} = 1")
        value *= base**e
    return value


def _mul_binomial(coeffs: list[int], m: int) -> list[int]:
    # coeffs * (t^m - 1)
    out = [0] * (len(coeffs) + m)
    for i, c in enumerate(coeffs):
        out[i + m] += c
        out[i] -= c
    return out


def _div_binomial(coeffs: list[int], m: int) -> list[int]:
    # exact division by (t^m - 1); raises if a remainder is left
    n = len(coeffs) - 1
    if n < m:
        raise NotAPolynomialError(f"degree {n} polynomial is not divisible by t^{m}-1")
    q = [0] * (n - m + 1)
    for i in range(n - m + 1):
        q[i] = -coeffs[i] + (q[i - m] if i >= m else 0)
    for i in range(n - m + 1, n + 1):
        # top coefficients must agree with q * t^m
        if coeffs[i] != (q[i - m] if i >= m else 0):
            raise NotAPolynomialError(f"remainder left dividing by t^{m}-1")
    return q


def lp_expand(p: LambdaProduct, max_degree: int = DEFAULT_MAX_EXPAND_DEGREE) -> list[int]:
    """Integer coefficients, lowest degree first."""
    deg = lp_degree(p)
    if deg < 0:
        raise NotAPolynomialError(f"negative degree {deg}")
    if deg > max_degree:
        raise DegreeCapError(f"degree {deg} exceeds cap {max_degree}")
    coeffs = [p.unit]
    for m, e in p.factors:
        for _ in range(max(e, 0)):
            coeffs = _mul_binomial(coeffs, m)
    for m, e in p.factors:
        for _ in range(max(-e, 0)):
            coeffs = _div_binomial(coeffs, m)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_evaluate(coeffs: list[int], t0: Fraction) -> Fraction:
    """Horner evaluation kept in integers: sum c_i p^i q^(n-i), then one division."""
    t0 = Fraction(t0)
    p, q = t0.numerator, t0.denominator
    n = len(coeffs) - 1
    acc = 0
    qpow = 1
    for c in reversed(coeffs):
        acc = acc * p + c * qpow
        qpow *= q
    return Fraction(acc, q**n)


def lp_root_of_unity_product(p: LambdaProduct, d: int) -> LambdaProduct:
    """``prod_{i=0}^{d-1} P(w^i t)`` for a primitive d-th root of unity w.

    Factorwise, prod_i ((w^i t)^m - 1) = ((-1)^(k+1) (t^(mk) - 1))^g with
    g = gcd(m, d) and k = d / g.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    acc: dict[int, int] = {}
    unit = p.unit**d
    for m, e in p.factors:
        g = math.gcd(m, d)
        k = d // g
        acc[m * k] = acc.get(m * k, 0) + g * e
        if k % 2 == 0 and (g * e) % 2:
            unit = -unit
    return LambdaProduct(acc, unit)


def _squarefree_int(n: int, bound: int) -> int:
    s = 1
    p = 2
    while p * p <= n:
        if p > bound:
            raise ValueError(f"trial division bound {bound} exceeded while reducing {n}")
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            s *= p
        p += 1 if p == 2 else 2
    return s * n


def squarefree_part(q, bound: int = DEFAULT_TRIAL_DIVISION_BOUND) -> int:
    """Signed squarefree representative of q in Q*/(Q*)^2."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree_part of 0 is undefined")
    sign = 1 if q > 0 else -1
    # q = a/b ~ a*b modulo squares
    return sign * _squarefree_int(abs(q.numerator) * q.denominator, bound)
