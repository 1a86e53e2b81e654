"""Minimal Sullivan models of formal simply connected spaces, up to a degree cutoff.

The model (ΛV, d) comes with a quasi-isomorphism to the cohomology ring A
(zero differential).  Degree by degree, for k = 2, 3, ..., cutoff:

* closed generators of degree k are added for a complement of the image of
  H^k(ΛV) in A^k;
* generators of degree k with dv = z are added for a complement of the
  boundaries inside ker(H^{k+1}(ΛV) -> A^{k+1}).

No degree-1 generators exist (simply connected input), so generators of degree
k never create new cocycles in degree k+1 and one pass per degree suffices.
Monomials are sparse tuples ((generator index, exponent), ...) in increasing
generator order; odd generators have exponent at most one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .rings import Element, GradedRing

Monomial = tuple[tuple[int, int], ...]
Poly = dict[Monomial, Fraction]


class CutoffError(ValueError):
    pass


@dataclass
class SullivanModel:
    degrees: list[int]
    labels: list[str]
    differential: list[Poly]
    images: list[Element]
    cutoff: int
    ring: GradedRing | None = field(default=None, repr=False)

    @property
    def generators(self) -> list[tuple[int, str]]:
        return list(zip(self.degrees, self.labels))

    # -- algebra --------------------------------------------------------------

    def mono_degree(self, m: Monomial) -> int:
        return sum(self.degrees[i] * e for i, e in m)

    def mono_mul(self, m1: Monomial, m2: Monomial) -> tuple[int, Monomial] | None:
        exps = dict(m1)
        sign = 1
        odd1 = [i for i, e in m1 if self.degrees[i] % 2]
        for j, e in m2:
            if self.degrees[j] % 2:
                if j in exps:
                    return None
                # move x_j left past the odd generators of m1 with larger index
                if sum(1 for i in odd1 if i > j) % 2:
                    sign = -sign
            exps[j] = exps.get(j, 0) + e
        return sign, tuple(sorted(exps.items()))

    def poly_mul(self, p: Poly, q: Poly) -> Poly:
        out: Poly = {}
        for m1, c1 in p.items():
            for m2, c2 in q.items():
                r = self.mono_mul(m1, m2)
                if r is None:
                    continue
                s, m = r
                out[m] = out.get(m, Fraction(0)) + s * c1 * c2
        return {m: c for m, c in out.items() if c != 0}

    def d_mono(self, m: Monomial) -> Poly:
        out: Poly = {}
        prefix_deg = 0
        for pos, (i, e) in enumerate(m):
            prefix = m[:pos]
            suffix = m[pos + 1 :]
            dx = self.differential[i]
            if dx:
                if self.degrees[i] % 2:
                    middle = dx
                else:
                    lower = ((i, e - 1),) if e > 1 else ()
                    middle = self.poly_mul({lower: Fraction(e)}, dx)
                sign = -1 if prefix_deg % 2 else 1
                term = self.poly_mul(self.poly_mul({prefix: Fraction(sign)}, middle), {suffix: Fraction(1)})
                for mm, c in term.items():
                    out[mm] = out.get(mm, Fraction(0)) + c
            prefix_deg += self.degrees[i] * e
        return {mm: c for mm, c in out.items() if c != 0}

    def d(self, p: Poly) -> Poly:
        out: Poly = {}
        for m, c in p.items():
            for mm, cc in self.d_mono(m).items():
                out[mm] = out.get(mm, Fraction(0)) + c * cc
        return {m: c for m, c in out.items() if c != 0}

    def monomials(self, deg: int) -> list[Monomial]:
        return _monomials(tuple(self.degrees), deg)

    def phi_mono(self, m: Monomial) -> Element:
        ring = self.ring
        out = ring.one
        for i, e in m:
            for _ in range(e):
                out = ring.mul(out, self.images[i])
        return out

    # -- reporting ---------------------------------------------------------------

    def homotopy_ranks(self) -> dict[int, int]:
        return homotopy_ranks(self)

    def format_poly(self, p: Poly) -> str:
        if not p:
            return "0"
        terms = []
        for m, c in sorted(p.items()):
            mono = "*".join(self.labels[i] + (f"^{e}" if e > 1 else "") for i, e in m) or "1"
            terms.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "generators": [
                {
                    "label": self.labels[i],
                    "degree": self.degrees[i],
                    "differential": [
                        [[list(pair) for pair in m], c.numerator, c.denominator]
                        for m, c in sorted(self.differential[i].items())
                    ],
                }
                for i in range(len(self.degrees))
            ],
        }


@lru_cache(maxsize=4096)
def _monomials(degrees: tuple[int, ...], deg: int, start: int = 0) -> list[Monomial]:
    if deg == 0:
        return [()]
    out = []
    for i in range(start, len(degrees)):
        g = degrees[i]
        max_e = 1 if g % 2 else deg // g
        for e in range(1, max_e + 1):
            rest = deg - e * g
            if rest < 0:
                break
            for tail in _monomials(degrees, rest, i + 1):
                out.append(((i, e),) + tail)
    return out


def _vector(p: Poly, index: dict[Monomial, int], size: int) -> list[Fraction]:
    v = [Fraction(0)] * size
    for m, c in p.items():
        v[index[m]] += c
    return v


def _ring_vector(ring: GradedRing, x: Element, deg: int) -> list[Fraction]:
    basis = ring.basis_in_degree(deg)
    return [x.get(i, Fraction(0)) for i in basis]


def _d_matrix(model: SullivanModel, deg: int) -> tuple[list[Monomial], list[list[Fraction]]]:
    """Rows: d of each monomial of degree deg, in the monomial basis of deg+1."""
    src = model.monomials(deg)
    tgt = model.monomials(deg + 1)
    index = {m: i for i, m in enumerate(tgt)}
    return src, [_vector(model.d_mono(m), index, len(tgt)) for m in src]


def _cocycles(model: SullivanModel, deg: int) -> list[list[Fraction]]:
    src, rows = _d_matrix(model, deg)
    if not src:
        return []
    # z (row vector over src) is a cocycle iff z * D = 0
    cols = len(rows[0]) if rows else 0
    transposed = [[rows[i][j] for i in range(len(src))] for j in range(cols)]
    return linalg.nullspace(transposed, len(src))


def _phi_matrix(model: SullivanModel, deg: int, vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    mons = model.monomials(deg)
    ring = model.ring
    imgs = [_ring_vector(ring, model.phi_mono(m), deg) for m in mons]
    width = ring.rank(deg)
    return [
        [sum((v[i] * imgs[i][j] for i in range(len(mons)) if v[i]), Fraction(0)) for j in range(width)]
        for v in vectors
    ]


def _boundaries(model: SullivanModel, deg: int) -> list[list[Fraction]]:
    if deg < 1:
        return []
    _, rows = _d_matrix(model, deg - 1)
    return [r for r in rows if any(r)]


def minimal_model(ring: GradedRing, cutoff: int | None = None) -> SullivanModel:
    if ring.rank(0) != 1 or ring.rank(1) != 0:
        raise ValueError("ring must be connected and simply connected (rank 1 in degree 0, 0 in degree 1)")
    if cutoff is None:
        cutoff = 2 * ring.top_degree + 1
    if cutoff < 2:
        raise CutoffError("cutoff must be >= 2")
    if ring.top_degree > cutoff:
        raise CutoffError(f"cutoff too small: ring has classes up to degree {ring.top_degree}")
    model = SullivanModel([], [], [], [], cutoff, ring)
    for k in range(2, cutoff + 1):
        new: list[tuple[Poly, Element]] = []
        # surjectivity in degree k
        z_k = _cocycles(model, k)
        width = ring.rank(k)
        if width:
            image = _phi_matrix(model, k, z_k)
            unit = [[Fraction(int(i == j)) for j in range(width)] for i in range(width)]
            basis = ring.basis_in_degree(k)
            for e in linalg.extend_basis(image, unit, width):
                new.append(({}, {basis[j]: c for j, c in enumerate(e) if c}))
        # injectivity in degree k+1
        z_next = _cocycles(model, k + 1)
        if z_next:
            phi_z = _phi_matrix(model, k + 1, z_next)
            width1 = ring.rank(k + 1)
            if width1:
                cols = [[phi_z[i][j] for i in range(len(z_next))] for j in range(width1)]
                combos = linalg.nullspace(cols, len(z_next))
            else:
                combos = [[Fraction(int(i == j)) for j in range(len(z_next))] for i in range(len(z_next))]
            kernel = [
                [sum((c[i] * z_next[i][m] for i in range(len(z_next)) if c[i]), Fraction(0))
                 for m in range(len(z_next[0]))]
                for c in combos
            ]
            if kernel:
                size = len(kernel[0])
                kernel, _ = linalg.rref(kernel, size)
                mons = model.monomials(k + 1)
                for z in linalg.extend_basis(_boundaries(model, k + 1), kernel, size):
                    new.append(({mons[i]: c for i, c in enumerate(z) if c}, {}))
        for j, (dv, img) in enumerate(new):
            label = f"g{k}" if len(new) == 1 else f"g{k}_{j + 1}"
            model.degrees.append(k)
            model.labels.append(label)
            model.differential.append(dv)
            model.images.append(img)
    _monomials.cache_clear()
    return model


def homotopy_ranks(model: SullivanModel) -> dict[int, int]:
    ranks: dict[int, int] = {}
    for g in model.degrees:
        ranks[g] = ranks.get(g, 0) + 1
    return dict(sorted(ranks.items()))


@dataclass
class ModelAudit:
    d_squared_zero: bool
    minimal: bool
    chain_map: bool
    cohomology_iso: dict[int, bool]

    @property
    def ok(self) -> bool:
        return self.d_squared_zero and self.minimal and self.chain_map and all(self.cohomology_iso.values())


def audit_model(model: SullivanModel) -> ModelAudit:
    ring = model.ring
    n = len(model.degrees)
    d2 = all(not model.d(model.differential[i]) for i in range(n))
    minimal = all(
        not (len(m) == 1 and m[0][1] == 1) for dv in model.differential for m in dv
    )
    chain = all(
        not {k: v for k, v in _sum_images(model, model.differential[i]).items() if v}
        for i in range(n)
    )
    iso = {}
    for deg in range(model.cutoff + 1):
        z = _cocycles(model, deg)
        b = _boundaries(model, deg)
        dim_b = linalg.rank(b, len(model.monomials(deg))) if b else 0
        width = ring.rank(deg)
        if width and z:
            r = linalg.rank(_phi_matrix(model, deg, z), width)
        else:
            r = 0
        iso[deg] = r == width and len(z) - r == dim_b
    _monomials.cache_clear()
    return ModelAudit(d2, minimal, chain, iso)


def _sum_images(model: SullivanModel, p: Poly) -> Element:
    out: Element = {}
    for m, c in p.items():
        for k, v in model.phi_mono(m).items():
            out[k] = out.get(k, Fraction(0)) + c * v
    return out


@dataclass
class EllipticityReport:
    total_rank_up_to_cutoff: int
    chi_pi: int
    window: tuple[int, int]
    generators_in_window: int
    verdict: str

    def to_json(self) -> dict:
        return {
            "total_rank_up_to_cutoff": self.total_rank_up_to_cutoff,
            "chi_pi": self.chi_pi,
            "window": list(self.window),
            "generators_in_window": self.generators_in_window,
            "verdict": self.verdict,
        }


def ellipticity_report(model: SullivanModel, ring: GradedRing | None = None) -> EllipticityReport:
    """Finite certificate: no generators in the last N degrees up to the cutoff
    (N = formal dimension) and chi_pi <= 0.  Says nothing above the cutoff."""
    ring = ring or model.ring
    n_dim = ring.top_degree
    if model.cutoff < 2 * n_dim - 1:
        raise CutoffError(f"ellipticity report needs cutoff >= {2 * n_dim - 1}, got {model.cutoff}")
    even = sum(1 for g in model.degrees if g % 2 == 0)
    odd = len(model.degrees) - even
    chi = even - odd
    lo = model.cutoff - n_dim
    in_window = sum(1 for g in model.degrees if lo < g <= model.cutoff)
    verdict = "elliptic at cutoff" if in_window == 0 and chi <= 0 else "inconclusive at cutoff"
    return EllipticityReport(len(model.degrees), chi, (lo + 1, model.cutoff), in_window, verdict)
