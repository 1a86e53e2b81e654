"""The hypersurface families H(a), V_n^d and W_n^d.

    H(a_0..a_{n+1}):  z0^a0 z1 + z1^a1 z2 + ... + z_{n+1}^a_{n+1} z0      (n odd)
    V_n^d:            z1^d + z0 z2^(d-1) + z2 z3^(d-1) + ... + zn z_{n+1}^(d-1)
    W_n^d:            z0 z1^(d-1) + z1 z2^(d-1) + ... + zn z_{n+1}^(d-1)

Phi_n^d is the monodromy characteristic polynomial of the singular point of
W_n^d and Delta_n^d the one of V_n^d.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .lambda_ring import (
    LambdaProduct,
    lp_mul,
    lp_root_of_unity_product,
)
from .milnor_orlik import WeightSystem, monodromy_char_poly

QUASI_SMOOTH_UNCHECKED = "quasi-smoothness unchecked"
OUTSIDE_HYPOTHESES = "outside theorem hypotheses"


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    n: int
    d: int | None = None
    a: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family == "H":
            if self.a is None:
                raise ValueError("H family needs the exponent vector a")
            object.__setattr__(self, "a", tuple(int(x) for x in self.a))
            if len(self.a) != self.n + 2:
                raise ValueError(f"H needs n+2 = {self.n + 2} exponents, got {len(self.a)}")
            if self.n < 3 or self.n % 2 == 0:
                raise ValueError(f"H requires odd n >= 3, got {self.n}")
            if any(x < 1 for x in self.a):
                raise ValueError("H exponents must be positive")
        elif self.family in ("V", "W"):
            if self.d is None or self.d < 2 or self.n < 1:
                raise ValueError(f"{self.family} requires n >= 1 and d >= 2")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def H(cls, a: Sequence[int]) -> FamilyInstance:
        return cls("H", len(a) - 2, a=tuple(a))

    @classmethod
    def V(cls, n: int, d: int) -> FamilyInstance:
        return cls("V", n, d)

    @classmethod
    def W(cls, n: int, d: int) -> FamilyInstance:
        return cls("W", n, d)

    @property
    def homotopy_quadric(self) -> bool:
        """The regime where W is a homology quadric: n and d both even."""
        return self.family == "W" and self.n % 2 == 0 and self.d % 2 == 0

    def to_json(self) -> dict:
        if self.family == "H":
            return {"family": "H", "a": list(self.a)}
        return {"family": self.family, "n": self.n, "d": self.d}

    @classmethod
    def from_json(cls, data: dict) -> FamilyInstance:
        if data["family"] == "H":
            return cls.H(data["a"])
        return cls(data["family"], int(data["n"]), int(data["d"]))


def _check(n: int, d: int) -> None:
    if n < 1 or d < 2:
        raise ValueError(f"need n >= 1 and d >= 2, got n={n}, d={d}")


# --- Kollar's cyclic system ----------------------------------------------


@dataclass(frozen=True)
class KollarSolution:
    a: tuple[int, ...]
    d: int
    weights: tuple[Fraction, ...]
    w_star: int | None
    admissible: bool
    flags: tuple[str, ...] = (QUASI_SMOOTH_UNCHECKED,)

    def residual(self) -> list[Fraction]:
        k = len(self.a)
        return [self.weights[i] + self.a[i - 1] * self.weights[i - 1] - self.d for i in range(k)]

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "d": self.d,
            "weights": [str(w) for w in self.weights],
            "w_star": self.w_star,
            "admissible": self.admissible,
            "flags": list(self.flags),
        }


def kollar_weight_system(a: Sequence[int]) -> KollarSolution:
    a = tuple(int(x) for x in a)
    n = len(a) - 2
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3 (len(a) = n+2), got n={n}")
    if any(x < 1 for x in a):
        raise ValueError("exponents must be positive integers")
    k = n + 2
    d = math.prod(a) + (-1) ** (n + 1)
    # row i: w_i + a_{i-1} w_{i-1} = d, indices mod n+2
    mat = [[0] * k for _ in range(k)]
    for i in range(k):
        mat[i][i] += 1
        mat[i][(i - 1) % k] += a[(i - 1) % k]
    if linalg.det(mat) == 0:
        raise ValueError("degenerate system")
    weights = tuple(linalg.solve(mat, [d] * k))
    integral = all(w.denominator == 1 and w > 0 for w in weights)
    w_star = math.gcd(*(int(w) for w in weights)) if integral else None
    return KollarSolution(a, d, weights, w_star, integral and w_star == 1)


# --- local weight systems --------------------------------------------------


def _chain_weights(first: Fraction, count: int, d: int) -> list[Fraction]:
    # z_i z_{i+1}^(d-1): 1/w_i + (d-1)/w_{i+1} = 1
    ws = [Fraction(first)]
    while len(ws) < count:
        w = ws[-1]
        ws.append((d - 1) * w / (w - 1))
    return ws


def _monomial_degree(exponents: dict[int, int], weights: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(e) / weights[i] for i, e in exponents.items()), Fraction(0))


def _check_monomials(monomials: list[dict[int, int]], weights: Sequence[Fraction]) -> None:
    for mono in monomials:
        deg = _monomial_degree(mono, weights)
        if deg != 1:
            raise AssertionError(f"monomial {mono} has weighted degree {deg}, expected 1")


def w_local_monomials(n: int, d: int) -> list[dict[int, int]]:
    """z1^(d-1) + z1 z2^(d-1) + ... + zn z_{n+1}^(d-1), variables indexed from 0."""
    monos = [{0: d - 1}]
    for i in range(n):
        monos.append({i: 1, i + 1: d - 1})
    return monos


def v_local_monomials(n: int, d: int) -> list[dict[int, int]]:
    """z1^d + z2^(d-1) + z2 z3^(d-1) + ... + zn z_{n+1}^(d-1)."""
    monos = [{0: d}, {1: d - 1}]
    for i in range(1, n):
        monos.append({i: 1, i + 1: d - 1})
    return monos


def _quadric_matrix(family: str, n: int) -> list[list[Fraction]]:
    """Symmetric matrix of V_n^2 or W_n^2 on z0..z_{n+1}."""
    k = n + 2
    m = [[Fraction(0)] * k for _ in range(k)]

    def add(i, j):
        m[i][j] += Fraction(1, 2)
        m[j][i] += Fraction(1, 2)

    if family == "V":
        m[1][1] += 1
        add(0, 2)
        for i in range(2, n + 1):
            add(i, i + 1)
    else:
        for i in range(0, n + 1):
            add(i, i + 1)
    return m


def _quadric_normal_form(family: str, n: int) -> WeightSystem:
    """At d = 2 the hypersurface is a quadric; its only possible singularity
    is an A1 point (corank one), otherwise every point is smooth and the germ
    is right-equivalent to z1 + z2^2 + ... (weights 1, 2, ..., 2)."""
    corank = n + 2 - linalg.rank(_quadric_matrix(family, n))
    if corank == 0:
        ws = [Fraction(1)] + [Fraction(2)] * n
    elif corank == 1:
        ws = [Fraction(2)] * (n + 1)
    else:
        raise AssertionError(f"quadric of corank {corank} has a non-isolated singularity")
    _check_monomials([{0: 1}] + [{i: 2} for i in range(1, n + 1)] if corank == 0
                     else [{i: 2} for i in range(n + 1)], ws)
    return WeightSystem(ws)


def w_weight_formula(i: int, d: int) -> Fraction:
    return Fraction(d * (d - 1) ** i, (d - 1) ** i + (-1) ** (i - 1))


def w_singularity_weights(n: int, d: int) -> WeightSystem:
    """Weights of the singular point of W_n^d (n = 0 is the germ z^(d-1))."""
    if n < 0 or d < 2:
        raise ValueError(f"need n >= 0 and d >= 2, got n={n}, d={d}")
    if d == 2:
        return _quadric_normal_form("W", n)
    ws = [w_weight_formula(i, d) for i in range(1, n + 2)]
    for i in range(1, n + 1):
        lhs = 1 / ws[i - 1] + (d - 1) / ws[i]
        if lhs != 1:
            raise AssertionError(f"balance identity fails at i={i}: {lhs}")
    if ws != _chain_weights(Fraction(d - 1), n + 1, d):
        raise AssertionError("closed-form weights disagree with the chain solve")
    _check_monomials(w_local_monomials(n, d), ws)
    return WeightSystem(ws)


def v_singularity_weights(n: int, d: int) -> WeightSystem:
    _check(n, d)
    if d == 2:
        return _quadric_normal_form("V", n)
    ws = [Fraction(d)] + _chain_weights(Fraction(d - 1), n, d)
    _check_monomials(v_local_monomials(n, d), ws)
    return WeightSystem(ws)


# --- recurrences -----------------------------------------------------------


def phi_closed_form(n: int, d: int) -> LambdaProduct:
    """Phi_n^d for even n, iterating Phi_{j+1} = Phi_{j-1} (t^((d-1)^(j+2))-1)/(t^((d-1)^(j+1))-1)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if n < 0 or n % 2:
        raise ValueError(
            f"the recurrence only reaches even n (got n={n}); "
            "use monodromy_char_poly(w_singularity_weights(n, d)) for odd n"
        )
    phi = LambdaProduct([(d - 1, 1), (1, -1)])
    for j in range(1, n, 2):
        phi = lp_mul(phi, LambdaProduct([((d - 1) ** (j + 2), 1), ((d - 1) ** (j + 1), -1)]))
    return phi


def _delta_step(n: int, d: int) -> LambdaProduct:
    # Delta_{n+2} / Delta_n
    e = d - 1
    return LambdaProduct([(d * e ** (n + 2), 1), (e ** (n + 1), 1), (e ** (n + 2), -1), (d * e ** (n + 1), -1)])


def delta_closed_form(n: int, d: int) -> LambdaProduct:
    _check(n, d)
    if n % 2:
        delta = LambdaProduct([(d * (d - 1), 1), (1, 1), (d - 1, -1), (d, -1)])
        start = 1
    else:
        delta = monodromy_char_poly(v_singularity_weights(2, d))
        start = 2
    for j in range(start, n, 2):
        delta = lp_mul(delta, _delta_step(j, d))
    return delta


def phi(n: int, d: int) -> LambdaProduct:
    """Phi_n^d for any n >= 0: recurrence for even n, divisor oracle for odd n."""
    if n % 2 == 0:
        return phi_closed_form(n, d)
    return monodromy_char_poly(w_singularity_weights(n, d))


def verify_ts_identity(n: int, d: int) -> bool:
    """Delta_{n+1}(t) Phi_n(t) == prod_{i=0}^{d-1} Phi_n(w^i t), units included."""
    if n % 2 or n < 0 or d < 2:
        raise ValueError("need even n >= 0 and d >= 2")
    phi_n = phi_closed_form(n, d)
    return lp_mul(delta_closed_form(n + 1, d), phi_n) == lp_root_of_unity_product(phi_n, d)


# --- numerical invariants ------------------------------------------------------


def milnor_number_V(n: int, d: int) -> int:
    _check(n, d)
    num = (d - 1) ** (n + 2) + (-1) ** n * (d - 1)
    assert num % d == 0
    return num // d


def milnor_number_W(n: int, d: int) -> int:
    """((d-1)^(n+2) - (-1)^n) / d; for even n this is ((d-1)^(n+2) - 1) / d."""
    if n < 0 or d < 2:
        raise ValueError(f"need n >= 0 and d >= 2, got n={n}, d={d}")
    num = (d - 1) ** (n + 2) - (-1) ** n
    assert num % d == 0
    return num // d


def smooth_middle_betti(n: int, d: int) -> int:
    """b_n of a smooth degree-d hypersurface in P^{n+1}."""
    return milnor_number_V(n, d) + (1 if n % 2 == 0 else 0)


def betti_numbers(inst: FamilyInstance) -> list[int]:
    n = inst.n
    betti = [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]
    if inst.family == "W":
        betti[n] = smooth_middle_betti(n, inst.d) - milnor_number_W(n, inst.d)
    return betti


def instance_flags(inst: FamilyInstance) -> list[str]:
    flags = []
    if inst.family == "H":
        flags.append(QUASI_SMOOTH_UNCHECKED)
        if not kollar_weight_system(inst.a).admissible:
            flags.append(OUTSIDE_HYPOTHESES)
    elif inst.family == "W" and not inst.homotopy_quadric:
        flags.append(OUTSIDE_HYPOTHESES)
        if betti_numbers(inst)[inst.n] < 0:
            flags.append("rank arithmetic inconsistent (negative middle rank)")
    return flags


@dataclass(frozen=True)
class SelfIntersection:
    value: int
    sign: str
    convention: str = "K = O(d - n - 2) (adjunction); zero exactly when d = n + 2"
    note: str = (
        "an alternative convention writes O(n+2-d) with zero case d = n+1; "
        "adjunction gives d = n+2, which is what is computed"
    )

    def to_json(self) -> dict:
        return {"value": self.value, "sign": self.sign, "convention": self.convention, "note": self.note}


def canonical_self_intersection(n: int, d: int) -> SelfIntersection:
    _check(n, d)
    value = d * (d - n - 2) ** n
    sign = "positive" if value > 0 else "zero" if value == 0 else "negative"
    return SelfIntersection(value, sign)


# --- affine chart ----------------------------------------------------------------


def w_equation(z: Sequence[Fraction], d: int) -> Fraction:
    """Evaluate the W_n^d polynomial at (z0, ..., z_{n+1})."""
    return sum((z[i] * z[i + 1] ** (d - 1) for i in range(len(z) - 1)), Fraction(0))


def affine_chart_point(sample: Sequence, d: int) -> list[Fraction]:
    """(z2..z_{n+1}) -> (z0, 1, z2, ..., z_{n+1}) on the chart z1 = 1."""
    zs = [Fraction(x) for x in sample]
    z0 = -w_equation([Fraction(1)] + zs, d)
    return [z0, Fraction(1)] + zs


def affine_chart_check(n: int, d: int, sample: Sequence) -> bool:
    if len(sample) != n:
        raise ValueError(f"sample must have n = {n} coordinates")
    point = affine_chart_point(sample, d)
    # the inverse map is the projection forgetting z1
    return w_equation(point, d) == 0 and point[2:] == [Fraction(x) for x in sample]
