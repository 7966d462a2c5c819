"""Dimensions of linear systems of surfaces in P^3 with base conditions.

Conditions are imposed exactly on the coefficients of a degree-d form in four
variables: vanishing to order ``m`` at a point kills every partial derivative
of order ``< m`` there, and containing a line kills all ``d + 1`` coefficients
of the form restricted to ``s*p + t*q``.
"""
from __future__ import annotations

from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .. import linalg
from ..errors import BadConfiguration

# p_1..p_4 the coordinate points, p_5 = (1, 1, 1, 1)
STANDARD_POINTS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))


def monomials(degree: int, nvars: int = 4) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for a in range(degree, -1, -1):
        out.extend((a,) + rest for rest in monomials(degree - a, nvars - 1))
    return out


def _falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k) if k <= n else 0


def _point_conditions(mons, point, mult) -> list[list[int]]:
    rows = []
    for order in range(mult):
        for beta in monomials(order, len(point)):
            row = []
            for alpha in mons:
                c = 1
                for a, b, x in zip(alpha, beta, point):
                    if b > a:
                        c = 0
                        break
                    c *= _falling(a, b) * x ** (a - b)
                row.append(c)
            rows.append(row)
    return rows


def _binomial_expand(p: int, q: int, n: int) -> list[int]:
    """Coefficients of ``(p s + q t)^n`` indexed by the power of ``t``."""
    return [comb(n, k) * p ** (n - k) * q ** k for k in range(n + 1)]


def _line_conditions(mons, degree, p, q) -> list[list[int]]:
    rows = [[0] * len(mons) for _ in range(degree + 1)]
    for col, alpha in enumerate(mons):
        poly = [1]
        for a, x, y in zip(alpha, p, q):
            factor = _binomial_expand(x, y, a)
            new = [0] * (len(poly) + len(factor) - 1)
            for i, u in enumerate(poly):
                if u:
                    for j, w in enumerate(factor):
                        new[i + j] += u * w
            poly = new
        for k, c in enumerate(poly):
            rows[k][col] += c
    return rows


def _proportional(u, v) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i, j in combinations(range(len(u)), 2))


def linear_series_dim(
    degree: int,
    points: Sequence[tuple[Sequence[int], int]],
    lines: Sequence[tuple[int, int]] = (),
) -> int:
    """Projective dimension of the degree-``degree`` surfaces through the
    given points (with multiplicities) and lines; ``-1`` if empty.

    ``lines`` are 0-based index pairs into ``points``.
    """
    if degree < 1:
        raise BadConfiguration("degree must be positive")
    coords = [tuple(p) for p, _ in points]
    if any(len(p) != 4 or not any(p) for p in coords):
        raise BadConfiguration("points must be nonzero vectors in 4 coordinates")
    for i, j in combinations(range(len(coords)), 2):
        if _proportional(coords[i], coords[j]):
            raise BadConfiguration(f"points {i} and {j} coincide")
    mons = monomials(degree)
    rows = []
    for p, mult in points:
        if mult < 0:
            raise BadConfiguration("negative multiplicity")
        rows.extend(_point_conditions(mons, p, mult))
    for i, j in lines:
        if i == j or not (0 <= i < len(coords) and 0 <= j < len(coords)):
            raise BadConfiguration(f"bad line ({i}, {j})")
        rows.extend(_line_conditions(mons, degree, coords[i], coords[j]))
    r = linalg.rank(rows) if rows else 0
    return len(mons) - r - 1


def line_indices(pairs) -> list[tuple[int, int]]:
    """1-based point pairs such as ``[(1, 4), (1, 5)]`` to 0-based indices."""
    return [(i - 1, j - 1) for i, j in pairs]
