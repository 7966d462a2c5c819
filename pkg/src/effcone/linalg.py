"""Exact linear algebra over the integers and rationals.

Everything here works on plain sequences of ``int`` or ``Fraction`` and never
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple


class LinalgError(ValueError):
    pass


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence) -> tuple[int, ...]:
    """Smallest positive multiple of ``v`` with coprime integer entries.

    Raises ``ValueError`` for the zero vector.
    """
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    if any(isinstance(x, Fraction) for r in m for x in r):
        return len(rref(m)[1])
    nrows, ncols = len(m), len(m[0])
    rk = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(rk, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rk], m[p] = m[p], m[rk]
        piv = m[rk][c]
        for i in range(rk + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_p = m[rk]
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - mic * row_p[j]) // prev
        prev = piv
        rk += 1
        if rk == nrows:
            break
    return rk


def kernel(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Integer basis (primitive vectors) of the right kernel of ``rows``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One exact solution of ``a x = b`` or None if inconsistent."""
    ncols = len(a[0])
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def inverse(m: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise LinalgError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def as_int_matrix(m: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise LinalgError("matrix has non-integral entries")
            r.append(int(x))
        out.append(tuple(r))
    return tuple(out)
