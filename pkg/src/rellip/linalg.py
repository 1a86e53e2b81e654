"""Exact linear algebra over Q on lists of Fractions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns. Zero rows are dropped."""
    m = to_fractions(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {x : A x = 0}, one vector per free column, in canonical form."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def extend_basis(span: Sequence[Sequence], candidates: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Greedily pick candidates that are independent of ``span`` and of each other."""
    current = [list(map(Fraction, v)) for v in span]
    r = rank(current, ncols) if current else 0
    chosen = []
    for v in candidates:
        trial = current + [list(map(Fraction, v))]
        rt = rank(trial, ncols)
        if rt > r:
            current, r = trial, rt
            chosen.append(list(map(Fraction, v)))
    return chosen


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Unique solution of a square system; ValueError if singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def det(a: Sequence[Sequence]) -> Fraction:
    m = to_fractions(a)
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inertia(sym: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a rational symmetric matrix.

    Symmetric Gaussian elimination (congruence); a zero pivot with a nonzero
    off-diagonal entry is repaired by adding that row/column first.
    """
    m = to_fractions(sym)
    n = len(m)
    pos = neg = 0
    active = list(range(n))
    while active:
        i = next((k for k in active if m[k][k] != 0), None)
        if i is None:
            pair = next(((k, l) for k in active for l in active if m[k][l] != 0), None)
            if pair is None:
                break
            k, l = pair
            # x_k -> x_k + x_l makes the (k,k) entry 2 m[k][l] != 0
            for j in range(n):
                m[k][j] += m[l][j]
            for j in range(n):
                m[j][k] += m[j][l]
            i = k
        p = m[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(i)
        for k in active:
            f = m[k][i] / p
            if f:
                for j in active:
                    m[k][j] -= f * m[i][j]
                m[k][i] = Fraction(0)
        for k in active:
            m[i][k] = Fraction(0)
    return pos, neg, n - pos - neg
