"""Curve and nef generators on the surfaces M_{0,5} and F_sigma.

Both surfaces are blow-ups of P^2, with intersection form diag(1, -1, ...).
"""
from __future__ import annotations

from itertools import combinations, permutations

from ..cone import LatticeVector
from .lattice import FSIGMA, M05

_FOUR = (1, 2, 3, 4)


def _m05(l, *es) -> LatticeVector:
    """``l*L - sum E_i`` for i in ``es``."""
    terms = {"L": l}
    for i in es:
        terms[f"E{i}"] = terms.get(f"E{i}", 0) - 1
    return M05.vector(terms)


def m05_effective_generators() -> list[LatticeVector]:
    """The ten boundary curves ``E_i`` and ``L - E_i - E_j``."""
    out = [M05.vector({f"E{i}": 1}) for i in _FOUR]
    out += [_m05(1, i, j) for i, j in combinations(_FOUR, 2)]
    return out


def m05_nef_generators() -> list[LatticeVector]:
    """Pullbacks from the forgetful maps and blow-downs:
    ``L - E_i``, ``2L - E_1 - ... - E_4``, ``L``, ``2L - E_i - E_j - E_k``."""
    out = [_m05(1, i) for i in _FOUR]
    out.append(_m05(2, *_FOUR))
    out.append(_m05(1))
    out += [_m05(2, *t) for t in combinations(_FOUR, 3)]
    return out


def _g(i, j) -> str:
    return f"G{min(i, j)}{max(i, j)}"


def fsigma_class(h: int, g: dict) -> LatticeVector:
    """``h*H - sum c * G_ij`` from a map ``{(i, j): c}``."""
    terms = {"H": h}
    for (i, j), c in g.items():
        terms[_g(i, j)] = terms.get(_g(i, j), 0) - c
    return FSIGMA.vector(terms)


def fsigma_curve_generators() -> list[LatticeVector]:
    """The six G_ij and seven further curves: three (-1)-curves
    ``H - G_ij - G_kl`` and four (-2)-curves ``H - G_ij - G_ik - G_il``."""
    out = [FSIGMA.vector({_g(i, j): 1}) for i, j in combinations(_FOUR, 2)]
    for (i, j) in ((1, 2), (1, 3), (1, 4)):
        k, l = [x for x in _FOUR if x not in (i, j)]
        out.append(fsigma_class(1, {(i, j): 1, (k, l): 1}))
    for i in _FOUR:
        others = [x for x in _FOUR if x != i]
        out.append(fsigma_class(1, {(i, x): 1 for x in others}))
    return out


# one representative per S_4-orbit, with the orbit size it should produce
FSIGMA_SEMIAMPLE_ORBITS = (
    ((1, {}), 1),
    ((1, {(1, 2): 1}), 6),
    ((2, {(1, 2): 1, (1, 3): 1, (2, 3): 1}), 4),
    ((2, {(1, 2): 1, (2, 3): 1, (3, 4): 1}), 12),
    ((2, {(1, 2): 1, (2, 3): 1, (3, 4): 1, (1, 4): 1}), 3),
    ((3, {(1, 2): 2, (1, 3): 1, (2, 3): 1, (3, 4): 1}), 12),
)


def s4_orbit(h: int, g: dict) -> list[LatticeVector]:
    seen = {}
    for perm in permutations(_FOUR):
        img = {(perm[i - 1], perm[j - 1]): c for (i, j), c in g.items()}
        v = fsigma_class(h, img)
        seen[v.coords] = v
    return [seen[k] for k in sorted(seen)]


def fsigma_semiample_orbits() -> list[list[LatticeVector]]:
    return [s4_orbit(h, g) for (h, g), _ in FSIGMA_SEMIAMPLE_ORBITS]


def fsigma_semiample_generators() -> list[LatticeVector]:
    return [v for orbit in fsigma_semiample_orbits() for v in orbit]
