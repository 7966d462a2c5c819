"""Exact polyhedral cones: dualization, extremal rays and membership.

A :class:`Cone` is given by generating rays (and an optional lineality
basis).  Rays are stored as tuples of Python ints in primitive form.
Dualization runs the double description method on the generators viewed as
inequalities ``f . x >= 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import BasisMismatch, DimensionMismatch, ZeroRay
from .lp import check_combination, check_separator, nonnegative_combination


@dataclass(frozen=True)
class LatticeVector:
    """Coordinates in a named basis.

    Behaves like a tuple for indexing and iteration so that cone routines
    accept either.
    """

    coords: tuple
    basis: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if isinstance(other, LatticeVector):
            if self.basis and other.basis and self.basis != other.basis:
                raise BasisMismatch(f"{self.basis} vs {other.basis}")
            other = other.coords
        if len(other) != len(self.coords):
            raise DimensionMismatch(f"{len(self.coords)} vs {len(other)}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, o)), self.basis)

    def __sub__(self, other):
        o = self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, o)), self.basis)

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords), self.basis)

    def __mul__(self, k):
        return LatticeVector(tuple(k * a for a in self.coords), self.basis)

    __rmul__ = __mul__

    def is_primitive(self) -> bool:
        return is_primitive(self.coords)


def is_primitive(v: Sequence) -> bool:
    if not all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1) for x in v):
        return False
    g = 0
    for x in v:
        g = np.gcd(g, int(x))
    return g == 1


def normalize_primitive(v):
    """Positive rescaling of ``v`` to coprime integers.

    >>> normalize_primitive((Fraction(2, 3), Fraction(4, 3)))
    (1, 2)
    """
    coords = tuple(v)
    try:
        out = linalg.primitive(coords)
    except ValueError:
        raise ZeroRay("cannot normalize the zero vector") from None
    if isinstance(v, LatticeVector):
        return LatticeVector(out, v.basis)
    return out


def _prepare(rays: Iterable, dim: int | None = None) -> tuple[int, list[tuple[int, ...]]]:
    out = []
    seen = set()
    for r in rays:
        r = tuple(r)
        if dim is None:
            dim = len(r)
        elif len(r) != dim:
            raise DimensionMismatch(f"ray of length {len(r)} in dimension {dim}")
        if all(x == 0 for x in r):
            continue
        p = linalg.primitive(r)
        if p not in seen:
            seen.add(p)
            out.append(p)
    if dim is None:
        raise DimensionMismatch("cannot infer dimension from an empty ray list")
    return dim, out


@dataclass(frozen=True)
class Cone:
    """Finitely generated cone ``cone(rays) + span(lineality)``.

    ``facets``, when present, are inequality normals ``f`` with ``f . x >= 0``
    on the cone that together cut it out exactly.
    """

    dim: int
    rays: tuple = ()
    lineality: tuple = ()
    facets: tuple | None = None
    basis: str | None = field(default=None, compare=False)

    @classmethod
    def from_rays(cls, rays, dim=None, lineality=(), basis=None) -> "Cone":
        rays = list(rays)
        if basis is None:
            basis = next((r.basis for r in rays if isinstance(r, LatticeVector)), None)
        dim, prim = _prepare(rays, dim)
        _, lin = _prepare(lineality, dim)
        return cls(dim, tuple(sorted(prim)), tuple(lin), None, basis)

    def generators(self) -> list[tuple[int, ...]]:
        """Rays plus both signs of every lineality vector."""
        gens = list(self.rays)
        for v in self.lineality:
            gens.append(tuple(v))
            gens.append(tuple(-x for x in v))
        return gens

    def is_pointed(self) -> bool:
        if self.lineality:
            return False
        if not self.rays:
            return True
        return linalg.rank(dual_cone(self).generators()) == self.dim

    def contains(self, v) -> bool:
        return member(v, self).is_member


# ---------------------------------------------------------------------------
# double description

_INT64_SAFE = 2 ** 60


def _normalize_rows(arr: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(arr, axis=1)
    g[g == 0] = 1
    return arr // g[:, None]


def double_description(
    rows: Sequence[Sequence[int]], dim: int, adjacency: str = "combinatorial"
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """V-representation of ``{x : A x >= 0}``.

    Returns ``(rays, lineality)``: primitive extremal rays (taken modulo and
    orthogonal to the lineality space) and a primitive lineality basis, both
    sorted lexicographically.

    ``adjacency`` selects the test for pairs of rays: ``"combinatorial"``
    checks that no third ray is tight on every constraint the pair shares;
    ``"algebraic"`` checks that those shared constraints have rank
    ``dim - lineality - 2``.  Both are exact; the combinatorial test is faster.
    """
    if adjacency not in ("combinatorial", "algebraic"):
        raise ValueError(f"unknown adjacency test {adjacency!r}")
    irows = [linalg.primitive(r) for r in rows if any(x != 0 for x in r)]
    irows = sorted(set(irows))
    m = len(irows)
    big = max((abs(x) for r in irows for x in r), default=1)
    dtype = np.int64 if big < 2 ** 20 else object
    A = np.array(irows, dtype=dtype).reshape(m, dim)

    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    R = np.zeros((0, dim), dtype=dtype)
    processed: list[int] = []
    remaining = list(range(m))

    def to_dtype(arr, extra=1):
        # switch to Python ints before any later product could overflow int64
        nonlocal dtype, A
        if dtype is np.int64 and arr.size:
            r = int(np.abs(arr).max())
            if r * max(r, extra) * big * dim >= _INT64_SAFE:
                dtype = object
                A = A.astype(object)
        return arr.astype(dtype)

    # lineality phase: rows not vanishing on the current lineality space
    while remaining:
        pick = None
        for k in remaining:
            vals = [linalg.dot(irows[k], l) for l in lin]
            if any(vals):
                pick = (k, vals)
                break
        if pick is None:
            break
        k, vals = pick
        a = irows[k]
        i0 = next(i for i, x in enumerate(vals) if x)
        l0 = lin[i0]
        s0 = vals[i0]
        if s0 < 0:
            l0 = tuple(-x for x in l0)
            s0 = -s0
        new_lin = []
        for i, l in enumerate(lin):
            if i == i0:
                continue
            v = [s0 * x - vals[i] * y for x, y in zip(l, l0)]
            if any(v):
                new_lin.append(linalg.primitive(v))
        lin = new_lin
        if len(R):
            R = to_dtype(R, max(abs(x) for x in l0))
            sa = R @ np.array(a, dtype=R.dtype)
            R = s0 * R - sa[:, None] * np.array(l0, dtype=R.dtype)[None, :]
            R = _normalize_rows(R)
        R = np.vstack([R, np.array([l0], dtype=R.dtype)]) if len(R) else np.array([l0], dtype=dtype)
        R = to_dtype(R)
        processed.append(k)
        remaining.remove(k)

    nlin = len(lin)
    target_rank = dim - nlin
    S = (R @ A.T) if len(R) else np.zeros((0, m), dtype=dtype)

    while remaining:
        k = _choose_row(S, remaining, irows)
        remaining.remove(k)
        s = S[:, k]
        pos = np.nonzero(s > 0)[0]
        neg = np.nonzero(s < 0)[0]
        zer = np.nonzero(s == 0)[0]
        if len(neg) == 0:
            processed.append(k)
            continue
        cols = np.array(processed, dtype=np.int64)
        Z = (S[:, cols] == 0)
        need = target_rank - 2
        new_rows = []
        if len(pos):
            Zf = Z.astype(np.float32)
            common = Zf[pos] @ Zf[neg].T
            pi, ni = np.nonzero(common >= need - 0.5)
            if len(pi):
                P = pos[pi]
                N = neg[ni]
                if adjacency == "combinatorial":
                    keep = _combinatorial_adjacent(Z, P, N)
                else:
                    keep = _algebraic_adjacent(Z, P, N, A[cols], need)
                P = P[keep]
                N = N[keep]
                if len(P):
                    sp = s[P][:, None]
                    sn = s[N][:, None]
                    new = sp * R[N] - sn * R[P]
                    new_rows.append(_normalize_rows(new))
        keep_idx = np.concatenate([pos, zer])
        keep_idx.sort()
        parts = [R[keep_idx]] + new_rows
        R = to_dtype(np.vstack(parts))
        S = R @ A.T
        processed.append(k)

    rays = [tuple(int(x) for x in r) for r in R]
    if lin:
        rays = _project_off(rays, lin)
        lin = [linalg.primitive(r) for r in linalg.rref(lin)[0]]
    rays = sorted(set(rays))
    return rays, sorted(lin)


def _choose_row(S: np.ndarray, remaining: list[int], irows) -> int:
    """Next row to insert: fewest rays strictly violating it, then fewest
    tight rays, then lexicographically smallest row."""
    best = None
    for k in remaining:
        col = S[:, k]
        key = (int(np.count_nonzero(col < 0)), int(np.count_nonzero(col == 0)), irows[k])
        if best is None or key < best[0]:
            best = (key, k)
    return best[1]


def _combinatorial_adjacent(Z: np.ndarray, P: np.ndarray, N: np.ndarray) -> np.ndarray:
    notz = (~Z).astype(np.float32)
    nrays = Z.shape[0]
    keep = np.zeros(len(P), dtype=bool)
    chunk = max(1, int(4e7 // max(nrays, 1)))
    for start in range(0, len(P), chunk):
        p = P[start:start + chunk]
        n = N[start:start + chunk]
        common = (Z[p] & Z[n]).astype(np.float32)
        # misses[r, c] = number of shared tight rows of pair c where ray r is not tight
        misses = notz @ common.T
        containing = np.count_nonzero(misses < 0.5, axis=0)
        keep[start:start + chunk] = containing == 2
    return keep


def _algebraic_adjacent(Z, P, N, Aproc, need) -> np.ndarray:
    keep = np.zeros(len(P), dtype=bool)
    rows_py = [tuple(int(x) for x in r) for r in Aproc]
    for idx, (p, n) in enumerate(zip(P, N)):
        common = np.nonzero(Z[p] & Z[n])[0]
        keep[idx] = linalg.rank([rows_py[c] for c in common]) == need if len(common) >= need else False
    return keep


def _project_off(rays, lin):
    """Project rays onto the orthogonal complement of span(lin), primitive."""
    basis = [[Fraction(x) for x in b] for b in lin]
    # Gram-Schmidt over Q
    ortho = []
    for b in basis:
        v = list(b)
        for u, uu in ortho:
            c = linalg.dot(v, u) / uu
            v = [x - c * y for x, y in zip(v, u)]
        ortho.append((v, linalg.dot(v, v)))
    out = []
    for r in rays:
        v = [Fraction(x) for x in r]
        for u, uu in ortho:
            c = linalg.dot(v, u) / uu
            v = [x - c * y for x, y in zip(v, u)]
        if any(v):
            out.append(linalg.primitive(v))
    return out


# ---------------------------------------------------------------------------
# public operations


def dual_cone(c: Cone, adjacency: str = "combinatorial") -> Cone:
    """The dual ``{f : f . x >= 0 for all x in c}``.

    The input generators become the facet normals of the result.
    """
    gens = c.generators()
    if not gens:
        raise DimensionMismatch("cannot dualize a cone without generators")
    for g in gens:
        if len(g) != c.dim:
            raise DimensionMismatch(f"generator of length {len(g)} in dimension {c.dim}")
    rays, lin = double_description(gens, c.dim, adjacency=adjacency)
    return Cone(c.dim, tuple(rays), tuple(lin), tuple(sorted(set(c.rays))), c.basis)


@dataclass(frozen=True)
class MembershipCertificate:
    """Outcome of a membership query, with its witness.

    ``coefficients`` maps generator tuples to nonnegative Fractions when the
    query is a member; ``separator`` is a Farkas functional otherwise.
    """

    query: tuple
    is_member: bool
    coefficients: dict | None = None
    separator: tuple | None = None

    @property
    def verdict(self) -> str:
        return "member" if self.is_member else "non-member"

    def verify(self, generators) -> bool:
        gens = [tuple(g) for g in generators]
        if self.is_member:
            if self.coefficients is None or any(g not in set(gens) for g in self.coefficients):
                return False
            keys = list(self.coefficients)
            return check_combination(keys, self.query, [self.coefficients[g] for g in keys])
        if self.separator is None:
            return False
        return check_separator(gens, self.query, self.separator)


class CertificateError(AssertionError):
    pass


def member(v, c: Cone, hint: dict | None = None) -> MembershipCertificate:
    """Decide ``v in c`` exactly and return a self-checked certificate.

    ``hint`` may supply candidate coefficients ``{generator: coefficient}``;
    they are used as-is if they verify, otherwise the LP runs.
    """
    if isinstance(v, LatticeVector) and v.basis and c.basis and v.basis != c.basis:
        raise BasisMismatch(f"vector in {v.basis}, cone in {c.basis}")
    q = tuple(v)
    if len(q) != c.dim:
        raise DimensionMismatch(f"vector of length {len(q)} for cone of dimension {c.dim}")
    gens = c.generators()
    if hint:
        cert = MembershipCertificate(q, True, {tuple(g): Fraction(x) for g, x in hint.items() if x})
        if all(x >= 0 for x in cert.coefficients.values()) and cert.verify(gens):
            return cert
    if not gens:
        if all(x == 0 for x in q):
            return MembershipCertificate(q, True, {})
        return MembershipCertificate(q, False, separator=linalg.primitive([-x for x in q]))
    den = 1
    for x in q:
        den = np.lcm(den, Fraction(x).denominator)
    res = nonnegative_combination(gens, [int(Fraction(x) * den) for x in q])
    if res.feasible:
        scale = Fraction(1, int(den))
        coeffs = {g: lam * scale for g, lam in zip(gens, res.coefficients) if lam}
        cert = MembershipCertificate(q, True, coeffs)
    else:
        cert = MembershipCertificate(q, False, separator=res.separator)
    if not cert.verify(gens):
        raise CertificateError(f"LP certificate failed re-verification for {q}")
    return cert


def extremal_rays(c: Cone, method: str = "auto") -> Cone:
    """Minimal generating set of ``c``.

    ``method="lp"`` drops, in lexicographic order, each ray that is a
    nonnegative combination of the remaining generators.  ``method="rank"``
    needs ``c.facets`` and keeps a ray iff the facets tight on it have rank
    ``dim - lineality - 1``.  ``"auto"`` picks ``rank`` when facets exist.
    """
    if method == "auto":
        method = "rank" if c.facets is not None else "lp"
    rays = sorted(set(c.rays))
    if method == "rank":
        if c.facets is None:
            raise ValueError("rank method needs facets")
        need = c.dim - len(c.lineality) - 1
        kept = []
        for r in rays:
            tight = [f for f in c.facets if linalg.dot(f, r) == 0]
            if len(tight) >= need and linalg.rank(tight) == need:
                kept.append(r)
        return Cone(c.dim, tuple(kept), c.lineality, c.facets, c.basis)
    if method != "lp":
        raise ValueError(f"unknown method {method!r}")
    kept = list(rays)
    for r in rays:
        others = [g for g in kept if g != r]
        rest = Cone(c.dim, tuple(others), c.lineality)
        if not others and not c.lineality:
            continue
        if member(r, rest).is_member:
            kept = others
    return Cone(c.dim, tuple(kept), c.lineality, c.facets, c.basis)


@dataclass(frozen=True)
class DualityWitness:
    is_dual: bool
    side: str | None = None
    generator: tuple | None = None
    separator: tuple | None = None

    def __bool__(self):
        return self.is_dual


def cones_dual_pair(a: Cone, b: Cone, pairing=None) -> DualityWitness:
    """Whether ``b`` equals the dual of ``a``.

    ``pairing`` is an optional square matrix ``Q`` so that the pairing is
    ``<x, y> = x^T Q y`` with ``x`` from ``a`` and ``y`` from ``b``.  On
    failure the witness names a generator of one cone outside the other.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"rank {a.dim} vs rank {b.dim}")
    if pairing is not None:
        qt = linalg.transpose(pairing)
        a = Cone.from_rays([linalg.mat_vec(qt, r) for r in a.rays], a.dim,
                           [linalg.mat_vec(qt, v) for v in a.lineality])
    dual = dual_cone(a)
    for g in b.generators():
        cert = member(g, dual)
        if not cert.is_member:
            return DualityWitness(False, "b-not-in-dual", g, cert.separator)
    for g in dual.generators():
        cert = member(g, b)
        if not cert.is_member:
            return DualityWitness(False, "dual-not-in-b", g, cert.separator)
    return DualityWitness(True)
