"""Exact feasibility LP: find ``lam >= 0`` with ``sum(lam[j] * g[j]) == v``.

Phase-one simplex with Bland's rule on an integer tableau.  The tableau is
kept fraction free: ``T / D`` is the true tableau, ``D > 0`` the current basis
determinant, and every pivot divides exactly by the previous ``D``.  When the
system is infeasible the final phase-one duals give a Farkas separator.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import dot, primitive


class LPResult:
    __slots__ = ("feasible", "coefficients", "separator", "pivots")

    def __init__(self, feasible, coefficients=None, separator=None, pivots=0):
        self.feasible = feasible
        self.coefficients = coefficients
        self.separator = separator
        self.pivots = pivots

    def __repr__(self):
        if self.feasible:
            return f"LPResult(feasible, pivots={self.pivots})"
        return f"LPResult(infeasible, separator={self.separator})"


def nonnegative_combination(
    generators: Sequence[Sequence[int]], target: Sequence[int]
) -> LPResult:
    """Solve ``G lam = target, lam >= 0`` exactly.

    ``generators`` are the columns of ``G``; entries must be integers.
    On success ``coefficients`` is a tuple of Fractions, one per generator.
    On failure ``separator`` is a primitive integer vector ``f`` with
    ``f . g >= 0`` for every generator and ``f . target < 0``.
    """
    n = len(generators)
    d = len(target)
    if any(len(g) != d for g in generators):
        raise ValueError("generator dimension differs from target dimension")
    if all(x == 0 for x in target):
        return LPResult(True, tuple(Fraction(0) for _ in range(n)))

    sign = [(-1 if x < 0 else 1) for x in target]
    width = n + d + 1
    rhs = n + d
    rows = []
    for i in range(d):
        s = sign[i]
        row = [s * g[i] for g in generators]
        row.extend(int(k == i) for k in range(d))
        row.append(s * target[i])
        rows.append(row)
    obj = [0] * width
    for row in rows:
        for j in range(n):
            obj[j] -= row[j]
        obj[rhs] -= row[rhs]
    rows.append(obj)
    basis = [n + i for i in range(d)]
    D = 1
    pivots = 0

    while True:
        q = next((j for j in range(n) if obj[j] < 0), None)
        if q is None:
            break
        r = None
        for i in range(d):
            a = rows[i][q]
            if a <= 0:
                continue
            if r is None:
                r = i
                continue
            # compare rhs_i / a  with  rhs_r / a_r
            lhs = rows[i][rhs] * rows[r][q]
            cur = rows[r][rhs] * a
            if lhs < cur or (lhs == cur and basis[i] < basis[r]):
                r = i
        if r is None:
            # cannot happen in phase one: the objective is bounded below by 0
            raise RuntimeError("phase-one LP reported unbounded")
        prow = rows[r]
        piv = prow[q]
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[q]
            if f == 0:
                if piv != D:
                    rows[i] = [(piv * x) // D for x in row]
                continue
            rows[i] = [(piv * x - f * y) // D for x, y in zip(row, prow)]
        obj = rows[d]
        D = piv
        if D < 0:
            rows = [[-x for x in row] for row in rows]
            obj = rows[d]
            D = -D
        basis[r] = q
        pivots += 1

    if obj[rhs] != 0:
        # optimum w* = -obj[rhs]/D > 0; duals y_i = 1 - obj[n+i]/D
        y = [D - obj[n + i] for i in range(d)]
        sep = primitive([-sign[i] * y[i] for i in range(d)])
        return LPResult(False, separator=sep, pivots=pivots)

    lam = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            lam[b] = Fraction(rows[i][rhs], D)
    return LPResult(True, tuple(lam), pivots=pivots)


def check_combination(generators, target, coefficients) -> bool:
    if any(c < 0 for c in coefficients):
        return False
    total = [Fraction(0)] * len(target)
    for c, g in zip(coefficients, generators):
        if c:
            for i, x in enumerate(g):
                total[i] += c * x
    return all(t == x for t, x in zip(total, target))


def check_separator(generators, target, separator) -> bool:
    return all(dot(separator, g) >= 0 for g in generators) and dot(separator, target) < 0
