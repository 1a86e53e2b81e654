"""Divisor calculus for weighted-homogeneous isolated singularities.

Symbols L_a multiply by ``L_a * L_b = gcd(a, b) * L_lcm(a, b)``.  A variable
of weight ``w = u/v`` (so that ``z^w`` has weighted degree one) contributes
``(1/v) L_u - L_1``; the product over all variables is the divisor of the
monodromy's characteristic polynomial on reduced middle cohomology.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

from .lambda_ring import LambdaProduct


class NonIntegralError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Divisor:
    terms: tuple[tuple[int, Fraction], ...] = ()

    def __init__(self, terms: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for m, c in items:
            if m < 1:
                raise ValueError(f"Lambda index must be >= 1, got {m}")
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((m, c) for m, c in acc.items() if c != 0)))

    def __mul__(self, other: Divisor) -> Divisor:
        return divisor_mul(self, other)

    def __add__(self, other: Divisor) -> Divisor:
        return Divisor(list(self.terms) + list(other.terms))

    def __sub__(self, other: Divisor) -> Divisor:
        return Divisor(list(self.terms) + [(m, -c) for m, c in other.terms])

    def to_json(self) -> list[list[int]]:
        return [[m, c.numerator, c.denominator] for m, c in self.terms]


IDENTITY = Divisor({1: 1})


def lam(m: int, c=1) -> Divisor:
    return Divisor({m: Fraction(c)})


def divisor_mul(d1: Divisor, d2: Divisor) -> Divisor:
    acc: dict[int, Fraction] = {}
    for a, ca in d1.terms:
        for b, cb in d2.terms:
            g = math.gcd(a, b)
            l = a * b // g
            acc[l] = acc.get(l, Fraction(0)) + g * ca * cb
    return Divisor(acc)


def weight_divisor(w) -> Divisor:
    """Per-variable factor ``(1/v) L_u - L_1`` for w = u/v.

    w = 1 (a variable entering linearly, i.e. a smooth germ) gives the zero
    divisor: the Milnor fiber is contractible.
    """
    w = Fraction(w)
    if w < 1:
        raise ValueError(f"weight must be >= 1, got {w}")
    return Divisor({w.numerator: Fraction(1, w.denominator)}) - IDENTITY


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[Fraction, ...]

    def __init__(self, weights: Iterable):
        ws = tuple(Fraction(w) for w in weights)
        if not ws:
            raise ValueError("weight system must be nonempty")
        for w in ws:
            if w < 1:
                raise ValueError(f"weights must be >= 1, got {w}")
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.weights)

    def __add__(self, other: WeightSystem) -> WeightSystem:
        return WeightSystem(self.weights + other.weights)

    def to_json(self) -> list[str]:
        return [str(w) for w in self.weights]


def product_divisor(ws: WeightSystem) -> Divisor:
    return reduce(divisor_mul, (weight_divisor(w) for w in ws.weights), IDENTITY)


def divisor_to_lambda(div: Divisor) -> LambdaProduct:
    for m, c in div.terms:
        if c.denominator != 1:
            raise NonIntegralError(f"non-integral divisor: coefficient {c} at L_{m}")
    return LambdaProduct({m: int(c) for m, c in div.terms})


def monodromy_char_poly(ws: WeightSystem) -> LambdaProduct:
    return divisor_to_lambda(product_divisor(ws))


def milnor_number(ws: WeightSystem) -> int:
    mu = Fraction(1)
    for w in ws.weights:
        mu *= w - 1
    if mu.denominator != 1:
        raise NonIntegralError(f"non-integral Milnor number {mu}")
    return int(mu)
