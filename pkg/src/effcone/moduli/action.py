"""The symmetric group S_6 acting on the M_{0,6} divisor and curve lattices.

A permutation ``sigma`` sends ``D_S`` to ``D_{sigma(S)}``.  The 25 boundary
classes span the divisor lattice, so this determines a unique integer matrix
per permutation.  The curve action is the contragredient.
"""
from __future__ import annotations

from functools import lru_cache

from .. import linalg
from ..errors import SpanFailure, TableInconsistent
from ..group import GroupAction, contragredient
from .lattice import M06_CURVE, M06_DIVISOR, POINTS, boundary_class, boundary_labels

IDENTITY = POINTS
ADJACENT_TRANSPOSITIONS = tuple(
    tuple(i + 1 if j == i else i if j == i + 1 else j for j in POINTS) for i in range(1, 6)
)


def compose(s: tuple, g: tuple) -> tuple:
    """``s o g`` as an image tuple: ``i -> s(g(i))``."""
    return tuple(s[g[i] - 1] for i in range(len(g)))


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def cycle_notation(p: tuple) -> str:
    seen, parts = set(), []
    for i in POINTS:
        if i in seen or p[i - 1] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j - 1]
        parts.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def parse_permutation(text: str) -> tuple:
    img = list(POINTS)
    for chunk in text.replace(")", " ").replace("(", " ").split():
        cyc = [int(c) for c in chunk]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return tuple(img)


def boundary_span_rank() -> int:
    return linalg.rank([tuple(boundary_class(l)) for l in boundary_labels()])


def divisor_matrix(perm: tuple) -> tuple:
    """Matrix of ``perm`` on the divisor lattice.

    Solves ``M [D_P] = [D_{perm P}]`` over all 25 boundary classes at once;
    the system is overdetermined and must be consistent.
    """
    labels = boundary_labels()
    src = [tuple(boundary_class(l)) for l in labels]
    dst = [tuple(boundary_class(l.permute(perm))) for l in labels]
    if linalg.rank(src) < M06_DIVISOR.rank:
        raise SpanFailure("boundary classes do not span the divisor lattice")
    rows = []
    for i in range(M06_DIVISOR.rank):
        # row i of M satisfies  src[p] . m_i = dst[p][i]  for every p
        sol = linalg.solve(src, [d[i] for d in dst])
        if sol is None:
            raise TableInconsistent(f"no linear map realizes {cycle_notation(perm)}")
        rows.append(sol)
    return linalg.as_int_matrix(rows)


@lru_cache(maxsize=None)
def s6_action_on_divisors() -> GroupAction:
    gens = {p: divisor_matrix(p) for p in ADJACENT_TRANSPOSITIONS}
    return GroupAction.generate(gens, M06_DIVISOR.tag, compose=compose, identity_label=IDENTITY)


@lru_cache(maxsize=None)
def s6_action_on_curves() -> GroupAction:
    return contragredient(s6_action_on_divisors(), M06_CURVE.tag)
