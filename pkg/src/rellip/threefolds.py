"""Projective-bundle threefolds F_n = P(O + O(n)) over P^2 and Hirzebruch surfaces."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rings import GradedRing, ring_from_normal_form


@dataclass(frozen=True)
class BinaryCubicForm:
    """a X^3 + b X^2 Y + c X Y^2 + d Y^3."""

    a: int
    b: int
    c: int
    d: int

    def __call__(self, x, y):
        return self.a * x**3 + self.b * x**2 * y + self.c * x * y**2 + self.d * y**3

    def substitute(self, m: tuple[tuple[int, int], tuple[int, int]]) -> BinaryCubicForm:
        """f(pX + qY, rX + sY) for m = ((p, q), (r, s))."""
        (p, q), (r, s) = m
        # linear forms as coefficient pairs (coef of X, coef of Y)
        u, v = (p, q), (r, s)
        out = [0, 0, 0, 0]
        for coeff, (i, j) in zip((self.a, self.b, self.c, self.d), ((3, 0), (2, 1), (1, 2), (0, 3))):
            poly = [1]
            for lin in [u] * i + [v] * j:
                nxt = [0] * (len(poly) + 1)
                for k, c in enumerate(poly):
                    nxt[k] += c * lin[0]
                    nxt[k + 1] += c * lin[1]
                poly = nxt
            for k, c in enumerate(poly):
                out[k] += coeff * c
        return BinaryCubicForm(*out)

    def to_json(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]


def pe_cubic_form(n: int) -> BinaryCubicForm:
    """mu(ax + by) = 3a^2 b - 3n a b^2 + n^2 b^3 on H^2(F_n) in the basis (x, y)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return BinaryCubicForm(0, 3, -3 * n, n * n)


def cubic_discriminant(f: BinaryCubicForm) -> int:
    a, b, c, d = f.a, f.b, f.c, f.d
    return b * b * c * c + 18 * a * b * c * d - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d


def gl2z_equivalent(f: BinaryCubicForm, g: BinaryCubicForm, entry_bound: int = 3) -> bool | None:
    """True with a witness, False when discriminants differ, None (unknown) otherwise."""
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    if f == g:
        return True
    if cubic_discriminant(f) != cubic_discriminant(g):
        return False
    return True if find_gl2z_witness(f, g, entry_bound) is not None else None


def find_gl2z_witness(f: BinaryCubicForm, g: BinaryCubicForm, entry_bound: int):
    rng = range(-entry_bound, entry_bound + 1)
    for p, q, r, s in itertools.product(rng, repeat=4):
        if abs(p * s - q * r) != 1:
            continue
        m = ((p, q), (r, s))
        if f.substitute(m) == g:
            return m
    return None


def fn_homotopy_equivalent(n: int, m: int) -> bool:
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    return cubic_discriminant(pe_cubic_form(n)) == cubic_discriminant(pe_cubic_form(m))


def hirzebruch_diffeomorphic(n: int, m: int) -> bool:
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    return (n - m) % 2 == 0


def pe_cohomology_ring(n: int) -> GradedRing:
    """Z[x, y]/(x^3, y^2 + n x y), both generators in degree 2; top class x^2 y."""
    if n < 0:
        raise ValueError("n must be >= 0")
    basis = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)]

    def nf(m):
        a, b = m
        if b == 0:
            return {(a, 0): 1} if a <= 2 else {}
        # y^b = (-n)^(b-1) x^(b-1) y
        a, coeff = a + b - 1, (-n) ** (b - 1)
        return {(a, 1): coeff} if a <= 2 and coeff else {}

    return ring_from_normal_form(f"H*(F_{n})", ["x", "y"], [2, 2], basis, nf, "integers")


def triple_product_form(ring: GradedRing, first: str = "x", second: str = "y") -> BinaryCubicForm:
    """mu(aX + bY) = (a x + b y)^3 evaluated on the top class."""
    top = ring.basis_in_degree(ring.top_degree)
    if len(top) != 1:
        raise ValueError("no fundamental class")
    t = top[0]
    x, y = ring.elem(first), ring.elem(second)

    def mu(*factors) -> Fraction:
        out = ring.one
        for f in factors:
            out = ring.mul(out, f)
        return out.get(t, Fraction(0))

    coeffs = (mu(x, x, x), 3 * mu(x, x, y), 3 * mu(x, y, y), mu(y, y, y))
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("non-integral triple products")
    return BinaryCubicForm(*(int(c) for c in coeffs))


@dataclass(frozen=True)
class ThreefoldReport:
    n: int
    cubic_form: BinaryCubicForm
    discriminant: int
    betti: tuple[int, ...]
    w2: str = "not computed"
    p1_mod_48: str = "not computed"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cubic_form": self.cubic_form.to_json(),
            "discriminant": self.discriminant,
            "betti": list(self.betti),
            "w2": self.w2,
            "p1_mod_48": self.p1_mod_48,
        }


def threefold_report(n: int) -> ThreefoldReport:
    ring = pe_cohomology_ring(n)
    form = triple_product_form(ring)
    betti = tuple(ring.ranks())
    return ThreefoldReport(n, form, cubic_discriminant(form), betti)
