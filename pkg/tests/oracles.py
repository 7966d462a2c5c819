"""Slow, obviously-correct reference computations used to cross-check the engine."""
from fractions import Fraction
from itertools import combinations

from effcone import linalg


def rref_rank(rows):
    """Rank by plain Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def brute_force_facets(rays, dim):
    """Facet normals of a full-dimensional cone from all (dim-1)-subsets of rays."""
    rays = [tuple(r) for r in rays]
    facets = set()
    for sub in combinations(rays, dim - 1):
        if rref_rank(sub) != dim - 1:
            continue
        ker = linalg.kernel(list(sub), dim)
        assert len(ker) == 1
        f = ker[0]
        vals = [linalg.dot(f, r) for r in rays]
        if all(v >= 0 for v in vals):
            facets.add(linalg.primitive(f))
        elif all(v <= 0 for v in vals):
            facets.add(linalg.primitive([-x for x in f]))
    return sorted(facets)


def in_cone_by_facets(v, facets):
    return all(linalg.dot(f, v) >= 0 for f in facets)


def extremal_by_lp(rays):
    """Rays not in the cone of the other (distinct, primitive) rays."""
    from effcone.lp import nonnegative_combination
    prim = sorted({linalg.primitive(r) for r in rays})
    out = []
    for r in prim:
        others = [g for g in prim if g != r]
        if not others or not nonnegative_combination(others, r).feasible:
            out.append(r)
    return out
