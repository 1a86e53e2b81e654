"""Finite graded-commutative rings stored as explicit multiplication tables.

Every ring here has generators in even degrees and a known monomial basis, so
a ring is built from a normal-form function that rewrites an arbitrary
monomial (exponent vector over the generators) as a combination of basis
monomials.  Associativity and commutativity are audited at construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .lambda_ring import squarefree_part

Element = dict[int, Fraction]
NormalForm = Callable[[tuple[int, ...]], dict[tuple[int, ...], Fraction]]


class RingError(ValueError):
    pass


@dataclass
class GradedRing:
    name: str
    labels: list[str]
    degrees: list[int]
    table: dict[tuple[int, int], Element]
    coefficient_mode: str = "rationals"
    # geometric value of the top basis element (e.g. 2 if h^top is the basis)
    top_scale: Fraction = Fraction(1)
    monomials: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.audit()

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def basis_in_degree(self, deg: int) -> list[int]:
        return [i for i, g in enumerate(self.degrees) if g == deg]

    def rank(self, deg: int) -> int:
        return len(self.basis_in_degree(deg))

    def ranks(self) -> list[int]:
        return [self.rank(i) for i in range(self.top_degree + 1)]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def elem(self, label: str, coeff=1) -> Element:
        return {self.index(label): Fraction(coeff)}

    @property
    def one(self) -> Element:
        return {self.basis_in_degree(0)[0]: Fraction(1)}

    def mul(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.table.get((i, j), {}).items():
                    out[k] = out.get(k, Fraction(0)) + a * b * c
        return {k: v for k, v in out.items() if v != 0}

    def power(self, x: Element, e: int) -> Element:
        out = self.one
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def audit(self) -> None:
        n = len(self.labels)
        for (i, j), prod in self.table.items():
            for k in prod:
                if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                    raise RingError(f"{self.name}: product {i}*{j} leaves its degree")
        for i in range(n):
            for j in range(n):
                sign = -1 if self.degrees[i] % 2 and self.degrees[j] % 2 else 1
                lhs = self.table.get((i, j), {})
                rhs = {k: sign * v for k, v in self.table.get((j, i), {}).items()}
                if lhs != rhs:
                    raise RingError(f"{self.name}: not graded-commutative on ({i}, {j})")
        top = self.top_degree
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.degrees[i] + self.degrees[j] + self.degrees[k] > top:
                continue
            left = self.mul(self.mul({i: Fraction(1)}, {j: Fraction(1)}), {k: Fraction(1)})
            right = self.mul({i: Fraction(1)}, self.mul({j: Fraction(1)}, {k: Fraction(1)}))
            if left != right:
                raise RingError(f"{self.name}: not associative on ({i}, {j}, {k})")

    def format(self, x: Element) -> str:
        if not x:
            return "0"
        return " + ".join(f"{c}*{self.labels[i]}" for i, c in sorted(x.items()))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "coefficient_mode": self.coefficient_mode,
            "top_scale": str(self.top_scale),
            "basis": [{"label": l, "degree": g} for l, g in zip(self.labels, self.degrees)],
            "table": [
                [i, j, [[k, c.numerator, c.denominator] for k, c in sorted(prod.items())]]
                for (i, j), prod in sorted(self.table.items())
            ],
        }


def _label(gens: Sequence[str], mono: tuple[int, ...]) -> str:
    parts = [g if e == 1 else f"{g}^{e}" for g, e in zip(gens, mono) if e]
    return "*".join(parts) or "1"


def ring_from_normal_form(
    name: str,
    gens: Sequence[str],
    gen_degrees: Sequence[int],
    basis: Sequence[tuple[int, ...]],
    normal_form: NormalForm,
    coefficient_mode: str = "rationals",
    top_scale=1,
) -> GradedRing:
    order = sorted(range(len(basis)), key=lambda i: sum(e * g for e, g in zip(basis[i], gen_degrees)))
    basis = [tuple(basis[i]) for i in order]
    pos = {m: i for i, m in enumerate(basis)}
    degrees = [sum(e * g for e, g in zip(m, gen_degrees)) for m in basis]
    table: dict[tuple[int, int], Element] = {}
    for i, mi in enumerate(basis):
        for j, mj in enumerate(basis):
            prod = normal_form(tuple(a + b for a, b in zip(mi, mj)))
            el = {pos[m]: Fraction(c) for m, c in prod.items() if c != 0}
            if el:
                table[(i, j)] = el
    labels = [_label(gens, m) for m in basis]
    return GradedRing(name, labels, degrees, table, coefficient_mode, Fraction(top_scale), list(basis))


def truncated_polynomial_ring(n: int, gen_degree: int = 2) -> GradedRing:
    """Q[x]/(x^{n+1}); with gen_degree 2 this is H*(P^n)."""
    if n < 1 or gen_degree < 2 or gen_degree % 2:
        raise ValueError("need n >= 1 and an even generator degree >= 2")

    def nf(m):
        return {m: 1} if m[0] <= n else {}

    return ring_from_normal_form(f"Q[x]/x^{n + 1}", ["x"], [gen_degree], [(i,) for i in range(n + 1)], nf)


def twisted_projective_ring(n: int, d: int) -> GradedRing:
    """Z[h, y]/(h^{n+1}, h^t = d y) with t = (n+1)/2 (n odd) or n/2 + 1 (n even)."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    t = (n + 1) // 2 if n % 2 else n // 2 + 1
    basis = [(i, 0) for i in range(t)] + [(j, 1) for j in range(n - t + 1)]

    def nf(m):
        a, b = m
        if b == 0:
            if a < t:
                return {(a, 0): 1}
            return {(a - t, 1): d} if a <= n else {}
        if b == 1:
            return {(a, 1): 1} if a <= n - t else {}
        return {}

    return ring_from_normal_form(f"twisted P^{n} (d={d})", ["h", "y"], [2, 2 * t], basis, nf, "integers")


def twisted_quadric_ring(k: int, a) -> GradedRing:
    """Q[h, v]/(hv, h^{2k+1}, h^{2k} - a v^2), deg h = 2, deg v = 2k."""
    a = Fraction(a)
    if k < 1:
        raise ValueError("need k >= 1")
    if a == 0:
        raise ValueError("twist a must be nonzero")
    basis = [(j, 0) for j in range(2 * k + 1)] + [(0, 1)]

    def nf(m):
        e, b = m
        if b == 0:
            return {(e, 0): 1} if e <= 2 * k else {}
        if b == 1:
            return {(0, 1): 1} if e == 0 else {}
        if b == 2 and e == 0:
            return {(2 * k, 0): 1 / a}
        return {}

    return ring_from_normal_form(f"{a}-twisted quadric (k={k})", ["h", "v"], [2, 2 * k], basis, nf)


def smooth_quadric_ring(k: int) -> GradedRing:
    """H*(Q_2k, Z): Z[h, l]/(h^{k+1} - 2hl, l^2 - l h^k (k even) or l^2 (k odd), h^{2k+1}).

    The top basis element h^k l is the point class, so h^{2k} = 2 * point.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    eps = 1 if k % 2 == 0 else 0
    basis = [(i, 0) for i in range(k + 1)] + [(j, 1) for j in range(k + 1)]

    def nf(m):
        a, b = m
        coeff = 1
        if b >= 2:
            if not eps:
                return {}
            a, b = a + (b - 1) * k, 1
        if b == 1:
            return {(a, 1): coeff} if a <= k else {}
        if a <= k:
            return {(a, 0): 1}
        return {(a - k, 1): 2} if a <= 2 * k else {}

    return ring_from_normal_form(f"Q_{2 * k}", ["h", "l"], [2, 2 * k], basis, nf, "integers")


def odd_quadric_ring(k: int) -> GradedRing:
    """H*(Q_{2k+1}): h^i (i <= k), l h^j (j <= k) with h^{k+1} = 2 l, deg l = 2k+2."""
    if k < 1:
        raise ValueError("need k >= 1")
    basis = [(i, 0) for i in range(k + 1)] + [(j, 1) for j in range(k + 1)]

    def nf(m):
        a, b = m
        if b == 0:
            if a <= k:
                return {(a, 0): 1}
            return {(a - k - 1, 1): 2} if a <= 2 * k + 1 else {}
        if b == 1:
            return {(a, 1): 1} if a <= k else {}
        return {}

    return ring_from_normal_form(f"Q_{2 * k + 1}", ["h", "l"], [2, 2 * k + 2], basis, nf, "integers")


def wedge_of_spheres_ring(count: int = 2, degree: int = 2) -> GradedRing:
    """Cohomology of a wedge of spheres: all products of positive classes vanish."""
    gens = [f"x{i + 1}" for i in range(count)]
    basis = [tuple(0 for _ in gens)] + [tuple(int(i == j) for j in range(count)) for i in range(count)]

    def nf(m):
        return {m: 1} if sum(m) <= 1 else {}

    return ring_from_normal_form(f"wedge of {count} S^{degree}", gens, [degree] * count, basis, nf)


# --- quadric checks ------------------------------------------------------------


def quadric_vanishing_class_check(k: int) -> bool:
    """In H*(Q_2k), v = 2l - h^k satisfies hv = 0 and h^{2k} = (-1)^k v^2."""
    ring = smooth_quadric_ring(k)
    h = ring.elem("h")
    l = ring.elem("l")
    hk = ring.power(h, k)
    v = {i: 2 * l.get(i, 0) - hk.get(i, 0) for i in set(l) | set(hk)}
    v = {i: c for i, c in v.items() if c}
    sign = (-1) ** k
    v2 = {i: sign * c for i, c in ring.mul(v, v).items()}
    return ring.mul(h, v) == {} and ring.power(h, 2 * k) == v2


def linear_space_self_intersection(d: int, k: int) -> Fraction:
    """Self-intersection of a k-plane on a smooth 2k-dimensional degree-d hypersurface."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    return Fraction(1 - (1 - d) ** (k + 1), d)


# --- pairing and signature -----------------------------------------------------


def poincare_pairing(ring: GradedRing, geometric: bool = False) -> tuple[list[str], list[list[Fraction]]]:
    """Middle-degree cup-product matrix in units of the top basis element."""
    top = ring.basis_in_degree(ring.top_degree)
    if len(top) != 1 or ring.top_degree % 2:
        raise RingError("no fundamental class")
    t = top[0]
    scale = ring.top_scale if geometric else Fraction(1)
    middle = ring.basis_in_degree(ring.top_degree // 2)
    mat = [
        [ring.mul({i: Fraction(1)}, {j: Fraction(1)}).get(t, Fraction(0)) * scale for j in middle]
        for i in middle
    ]
    return [ring.labels[i] for i in middle], mat


def middle_signature(ring: GradedRing) -> tuple[int, int, int]:
    return linalg.inertia(poincare_pairing(ring)[1])


def real_homotopy_class(a) -> int:
    a = Fraction(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return 1 if a > 0 else -1


def rational_homotopy_class(a) -> int:
    return squarefree_part(a)


# --- isomorphism checks for rank-one-per-degree rings -------------------------------


def is_truncated_polynomial_ring(ring: GradedRing, generator: Element | None = None) -> bool:
    """True iff ring ~ Q[x]/(x^{N+1}), x in degree 2, via x -> generator."""
    top = ring.top_degree
    if top % 2:
        return False
    for deg in range(top + 1):
        if ring.rank(deg) != (1 if deg % 2 == 0 else 0):
            return False
    if generator is None:
        generator = {ring.basis_in_degree(2)[0]: Fraction(1)}
    # x^j -> g^j is multiplicative by construction; bijective iff no power vanishes
    return all(ring.power(generator, j) for j in range(top // 2 + 1))


def rational_iso_to_truncated(ring: GradedRing, n: int, d: int) -> bool:
    """Check that h -> x, y -> x^t / d is a graded ring isomorphism onto Q[x]/x^{n+1}."""
    t = (n + 1) // 2 if n % 2 else n // 2 + 1
    target = truncated_polynomial_ring(n)
    xpow = {target.degrees[i] // 2: i for i in range(len(target.labels))}

    def image(i: int) -> Element:
        a, b = ring.monomials[i]
        coeff = Fraction(1, d) ** b
        e = a + t * b
        return {xpow[e]: coeff} if e <= n else {}

    images = [image(i) for i in range(len(ring.labels))]
    for deg in range(0, 2 * n + 1, 2):
        idx = ring.basis_in_degree(deg)
        if len(idx) != 1 or not images[idx[0]]:
            return False
    for i in range(len(ring.labels)):
        for j in range(len(ring.labels)):
            lhs: Element = {}
            for k, c in ring.table.get((i, j), {}).items():
                for m, e in images[k].items():
                    lhs[m] = lhs.get(m, Fraction(0)) + c * e
            lhs = {m: c for m, c in lhs.items() if c}
            if lhs != target.mul(images[i], images[j]):
                return False
    return is_truncated_polynomial_ring(ring)


def odd_quadric_iso_check(k: int) -> bool:
    return is_truncated_polynomial_ring(odd_quadric_ring(k))
