"""Divisor and curve lattices of M_{0,5}, M_{0,6} and the fixed-point surface.

M_{0,6} is modelled as the blow-up of P^3 at p_1..p_5 followed by the ten
lines through pairs of them, with the sixth marked point singled out.  The
divisor basis is ``L, E_1..E_5, E_12..E_45`` and the curve basis is its dual,
so the divisor/curve pairing is the coordinate dot product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..cone import LatticeVector
from ..errors import BadLabel, BasisMismatch, DimensionMismatch

POINTS = (1, 2, 3, 4, 5, 6)
PAIRS5 = tuple(combinations(range(1, 6), 2))


@dataclass(frozen=True)
class ModuliBasis:
    space: str          # "M05", "M06" or "Fsigma"
    side: str           # "divisor" or "curve"
    labels: tuple

    @property
    def tag(self) -> str:
        return f"{self.space}/{self.side}"

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def vector(self, terms: dict | None = None, **kw) -> LatticeVector:
        coords = [0] * self.rank
        for k, c in dict(terms or {}, **kw).items():
            coords[self.index(k)] += c
        return LatticeVector(tuple(coords), self.tag)


def _e(*ix) -> str:
    return "E" + "".join(str(i) for i in sorted(ix))


M06_DIVISOR = ModuliBasis(
    "M06", "divisor",
    ("L",) + tuple(_e(i) for i in range(1, 6)) + tuple(_e(i, j) for i, j in PAIRS5),
)
M06_CURVE = ModuliBasis(
    "M06", "curve",
    ("L^2",) + tuple(f"E{i}^2" for i in range(1, 6)) + tuple(f"-LE{i}{j}" for i, j in PAIRS5),
)
# on a surface curves and divisors live in the same lattice
M05 = ModuliBasis("M05", "surface", ("L", "E1", "E2", "E3", "E4"))
FSIGMA = ModuliBasis("Fsigma", "surface", ("H", "G12", "G13", "G14", "G23", "G24", "G34"))

BASES = {b.tag: b for b in (M06_DIVISOR, M06_CURVE, M05, FSIGMA)}


def div(**terms) -> LatticeVector:
    """Divisor class on M_{0,6} from keyword coefficients, e.g. ``div(L=1, E1=-1)``."""
    return M06_DIVISOR.vector(terms)


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class BoundaryLabel:
    """A boundary divisor ``D_S``: an unordered split of {1..6} into parts of size >= 2."""

    part: frozenset

    def __post_init__(self):
        part = frozenset(self.part)
        if not part <= set(POINTS) or not 2 <= len(part) <= 4:
            raise BadLabel(f"invalid boundary part {sorted(part)}")
        # store the canonical side: the pair for 2|4 splits, the side with 1 for 3|3
        if len(part) == 4 or (len(part) == 3 and 1 not in part):
            part = frozenset(POINTS) - part
        object.__setattr__(self, "part", part)

    @classmethod
    def parse(cls, text: str) -> "BoundaryLabel":
        body = text[2:] if text.startswith("D_") else text
        if not body.isdigit():
            raise BadLabel(f"cannot parse boundary label {text!r}")
        digits = [int(c) for c in body]
        if len(set(digits)) != len(digits):
            raise BadLabel(f"repeated point in {text!r}")
        return cls(frozenset(digits))

    @property
    def complement(self) -> frozenset:
        return frozenset(POINTS) - self.part

    def sort_key(self):
        return (len(self.part), sorted(self.part))

    def permute(self, perm) -> "BoundaryLabel":
        return BoundaryLabel(frozenset(perm[i - 1] for i in self.part))

    def __str__(self):
        return "D_" + "".join(str(i) for i in sorted(self.part))


@dataclass(frozen=True, order=True)
class FixedPointLabel:
    """An involution of {1..6} with no fixed points, stored as sorted pairs."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        flat = [i for p in pairs for i in p]
        if len(pairs) != 3 or any(len(p) != 2 for p in pairs) or sorted(flat) != list(POINTS):
            raise BadLabel(f"not a product of three disjoint transpositions: {self.pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def parse(cls, text: str) -> "FixedPointLabel":
        body = text[2:] if text.startswith("F_") else text
        chunks = body.replace(")", " ").replace("(", " ").split()
        try:
            pairs = [tuple(int(c) for c in chunk) for chunk in chunks]
        except ValueError:
            raise BadLabel(f"cannot parse fixed-point label {text!r}") from None
        return cls(tuple(pairs))

    @classmethod
    def from_permutation(cls, perm) -> "FixedPointLabel":
        pairs = {tuple(sorted((i, perm[i - 1]))) for i in POINTS}
        return cls(tuple(pairs))

    def permutation(self) -> tuple:
        img = {}
        for a, b in self.pairs:
            img[a], img[b] = b, a
        return tuple(img[i] for i in POINTS)

    def conjugate(self, perm) -> "FixedPointLabel":
        """Label of ``perm * tau * perm^-1``."""
        return FixedPointLabel(tuple((perm[a - 1], perm[b - 1]) for a, b in self.pairs))

    def __str__(self):
        return "F_" + "".join(f"({a}{b})" for a, b in self.pairs)


def boundary_labels() -> list[BoundaryLabel]:
    """The 25 boundary labels: 15 of pair type, then 10 of triple type."""
    pairs = [BoundaryLabel(frozenset(p)) for p in combinations(POINTS, 2)]
    triples = [BoundaryLabel(frozenset(t)) for t in combinations(POINTS, 3) if 1 in t]
    return pairs + triples


def fixed_labels() -> list[FixedPointLabel]:
    out = set()
    for a, b in combinations(POINTS, 2):
        rest = [i for i in POINTS if i not in (a, b)]
        c = rest[0]
        for d in rest[1:]:
            e, f = [i for i in rest if i not in (c, d)]
            out.add(FixedPointLabel(((a, b), (c, d), (e, f))))
    return sorted(out)


# ---------------------------------------------------------------------------
# classes


def boundary_class(label: BoundaryLabel | str) -> LatticeVector:
    """Class of ``D_S`` in the divisor basis.

    ``D_{i6} = E_i``, ``D_{ij6} = E_ij`` and a pair ``{l, a}`` avoiding 6 is the
    proper transform of the plane through the other three points.
    """
    if isinstance(label, str):
        label = BoundaryLabel.parse(label)
    six_side = label.part if 6 in label.part else label.complement
    rest = sorted(six_side - {6})
    if len(rest) in (1, 2):
        return div(**{_e(*rest): 1})
    i, j, k = rest
    return div(L=1, **{_e(i): -1, _e(j): -1, _e(k): -1,
                       _e(i, j): -1, _e(i, k): -1, _e(j, k): -1})


def fixed_class(label: FixedPointLabel | str) -> LatticeVector:
    """Class of the fixed-point divisor of ``(ab)(cd)(j6)``:
    ``2L - E_1 - ... - E_5 - E_ac - E_ad - E_bc - E_bd``.
    """
    if isinstance(label, str):
        label = FixedPointLabel.parse(label)
    (a, b), (c, d) = [p for p in label.pairs if 6 not in p]
    terms = {"L": 2}
    for i in range(1, 6):
        terms[_e(i)] = -1
    for x, y in ((a, c), (a, d), (b, c), (b, d)):
        terms[_e(x, y)] = -1
    return div(**terms)


def canonical_class(l_coeff: int = -4) -> LatticeVector:
    """``K = -4L + 2 sum E_i + sum E_ij`` (``l_coeff`` only for mutation tests)."""
    terms = {"L": l_coeff}
    for i in range(1, 6):
        terms[_e(i)] = 2
    for i, j in PAIRS5:
        terms[_e(i, j)] = 1
    return div(**terms)


def pairing(d: LatticeVector, r: LatticeVector) -> Fraction:
    """Divisor/curve pairing: the dot product in dual bases."""
    if d.basis is None or r.basis is None:
        raise BasisMismatch("pairing needs tagged vectors")
    ds, dside = d.basis.split("/")
    rs, rside = r.basis.split("/")
    if ds != rs or {dside, rside} != {"divisor", "curve"}:
        raise BasisMismatch(f"cannot pair {d.basis} with {r.basis}")
    if dside == "curve":
        d, r = r, d
    if len(d) != len(r):
        raise DimensionMismatch(f"{len(d)} vs {len(r)}")
    return sum((Fraction(x) * y for x, y in zip(d, r)), Fraction(0))


def intersection_form(space: str) -> tuple:
    """Gram matrix ``diag(1, -1, ..., -1)`` of the surface lattice."""
    n = BASES[f"{space}/surface"].rank
    return tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n))


def surface_pairing(space: str, a, b) -> Fraction:
    basis = BASES.get(f"{space}/surface")
    if basis is None:
        raise BasisMismatch(f"{space} is not a surface lattice")
    for v in (a, b):
        if isinstance(v, LatticeVector) and v.basis not in (None, basis.tag):
            raise BasisMismatch(f"vector in {v.basis}, expected {basis.tag}")
        if len(v) != basis.rank:
            raise DimensionMismatch(f"length {len(v)} in rank {basis.rank}")
    a, b = tuple(a), tuple(b)
    return Fraction(a[0] * b[0]) - sum((Fraction(x) * y for x, y in zip(a[1:], b[1:])), Fraction(0))
