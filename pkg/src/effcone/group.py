"""Finite groups of unimodular integer matrices and their orbits on rays."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import linalg
from .errors import DimensionMismatch, NotActionClosed, NotUnimodular

Matrix = tuple  # tuple of row tuples


def _freeze(m) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


@dataclass(frozen=True)
class GroupAction:
    """A finite matrix group acting on the lattice ``lattice``.

    ``elements`` maps a label to its matrix; ``generators`` lists the labels
    used to build the group.  Vectors are acted on as column vectors.
    """

    lattice: str | None
    elements: dict
    generators: tuple
    compose: Callable | None = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return len(next(iter(self.elements.values())))

    def matrix(self, label) -> Matrix:
        return self.elements[label]

    def act(self, label, v) -> tuple:
        return linalg.mat_vec(self.elements[label], v)

    @classmethod
    def generate(
        cls,
        generators: dict,
        lattice: str | None = None,
        compose: Callable[[Hashable, Hashable], Hashable] | None = None,
        identity_label: Hashable = (),
        limit: int = 100_000,
    ) -> "GroupAction":
        """Close a set of generator matrices under multiplication.

        ``compose(s, g)`` returns the label of ``M_s @ M_g``.  Without it,
        labels are words in the generator labels (leftmost applied last).
        """
        gens = {k: _freeze(m) for k, m in generators.items()}
        for k, m in gens.items():
            _check_unimodular(m, k)
        n = len(next(iter(gens.values())))
        if any(len(m) != n for m in gens.values()):
            raise DimensionMismatch("generator matrices of different sizes")
        if compose is None:
            def compose(s, g):
                return (s,) + tuple(g)
        ident = _freeze(linalg.identity(n))
        if ident in gens.values() or len(set(gens.values())) != len(gens):
            raise ValueError("generators must be distinct non-identity matrices")
        arrs = {k: np.array(m, dtype=object) for k, m in gens.items()}
        elements = {identity_label: ident}
        seen = {ident: identity_label}
        queue = deque([(identity_label, np.array(ident, dtype=object))])
        while queue:
            label, mat = queue.popleft()
            for s, ms in arrs.items():
                prod = _freeze(ms.dot(mat))
                if prod in seen:
                    continue
                # generators keep their own labels
                new_label = s if label == identity_label else compose(s, label)
                seen[prod] = new_label
                elements[new_label] = prod
                if len(elements) > limit:
                    raise ValueError(f"group larger than {limit} elements")
                queue.append((new_label, np.array(prod, dtype=object)))
        return cls(lattice, elements, tuple(gens), compose)

    @classmethod
    def trivial(cls, dim: int, lattice: str | None = None) -> "GroupAction":
        return cls(lattice, {(): _freeze(linalg.identity(dim))}, ())

    def is_closed(self) -> bool:
        mats = set(self.elements.values())
        if _freeze(linalg.identity(self.dim)) not in mats:
            return False
        gens = [self.elements[g] for g in self.generators] or list(mats)
        return all(_freeze(linalg.mat_mul(s, m)) in mats for s in gens for m in mats)


def _check_unimodular(m: Matrix, label=None):
    det = linalg.determinant(m)
    if det not in (1, -1):
        raise NotUnimodular(f"matrix {label!r} has determinant {det}")


def contragredient_matrix(m: Matrix) -> Matrix:
    """Inverse transpose of a unimodular integer matrix."""
    try:
        inv = linalg.inverse(m)
    except linalg.LinalgError:
        raise NotUnimodular("matrix is not invertible") from None
    try:
        inv = linalg.as_int_matrix(inv)
    except linalg.LinalgError:
        raise NotUnimodular("inverse is not integral") from None
    return _freeze(linalg.transpose(inv))


def contragredient(g: GroupAction, lattice: str | None = None) -> GroupAction:
    """The dual action ``M -> M^{-T}``; preserves the coordinate pairing."""
    elements = {k: contragredient_matrix(m) for k, m in g.elements.items()}
    return GroupAction(lattice, elements, g.generators, g.compose)


@dataclass(frozen=True)
class Orbit:
    representative: tuple
    members: tuple

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_partition(
    rays: Iterable[Sequence[int]],
    g: GroupAction,
    key: Callable[[tuple], object] | None = None,
) -> list[Orbit]:
    """Partition ``rays`` into orbits of ``g``.

    Orbits are the connected components of the generator action.  Each
    orbit's representative is its lexicographically smallest member; orbits
    are sorted by ``(key(representative), size, representative)``.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    index = {r: i for i, r in enumerate(rays)}
    if len(index) != len(rays):
        raise ValueError("duplicate rays in input")
    if not rays:
        return []
    gens = [g.elements[s] for s in g.generators] or list(g.elements.values())
    R = np.array(rays, dtype=object)
    images = []
    for m in gens:
        if len(m) != R.shape[1]:
            raise DimensionMismatch(f"action of size {len(m)} on rays of length {R.shape[1]}")
        img = R.dot(np.array(m, dtype=object).T)
        idx = []
        for row in img:
            t = tuple(int(x) for x in row)
            j = index.get(t)
            if j is None:
                raise NotActionClosed(f"ray mapped outside the set: {t}")
            idx.append(j)
        images.append(idx)

    parent = list(range(len(rays)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for idx in images:
        for i, j in enumerate(idx):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[tuple]] = {}
    for i, r in enumerate(rays):
        groups.setdefault(find(i), []).append(r)
    orbits = [Orbit(min(ms), tuple(sorted(ms))) for ms in groups.values()]
    if key is None:
        orbits.sort(key=lambda o: (o.size, o.representative))
    else:
        orbits.sort(key=lambda o: (key(o.representative), o.size, o.representative))
    return orbits
