"""Curve generators for the boundary restrictions of M_{0,6}.

``B``, ``A`` and ``A_forget`` come straight from the embedded tables.  The
``C`` families are derived from the relations ``C_ij = A_ij;k + B_ijk`` and
``C_ij;k = A_ij + B_ijk``, which must not depend on the admissible ``k``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations

from .. import linalg
from ..cone import LatticeVector
from ..errors import BadLabel, PushforwardMismatch, TableInconsistent
from . import tables
from .lattice import M06_CURVE, POINTS, intersection_form
from .surfaces import m05_nef_generators

FAMILIES = ("B", "A", "A_forget", "C", "C_blowdown")


@dataclass(frozen=True)
class GeneratorTable:
    family: str
    entries: dict  # label -> LatticeVector

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, label):
        return self.entries[label]

    def vectors(self) -> list[LatticeVector]:
        return list(self.entries.values())


def _vec(coords) -> LatticeVector:
    return LatticeVector(tuple(coords), M06_CURVE.tag)


def b_label(*points) -> str:
    return "B_" + "".join(str(i) for i in sorted(points))


def a_label(i, j, k=None) -> str:
    i, j = sorted((i, j))
    return f"A_{i}{j}" if k is None else f"A_{i}{j};{k}"


def c_label(i, j, k=None) -> str:
    i, j = sorted((i, j))
    return f"C_{i}{j}" if k is None else f"C_{i}{j};{k}"


def _table(family, data) -> GeneratorTable:
    return GeneratorTable(family, {k: _vec(v) for k, v in data.items()})


def generator_tables() -> dict[str, GeneratorTable]:
    """All five families, keyed as in ``FAMILIES``.

    Raises ``TableInconsistent`` if a C class depends on the choice of ``k``
    or if the D_45 classes disagree with the embedded D_45 table.
    """
    b = _table("B", tables.B_TABLE)
    a = _table("A", tables.A_TABLE)
    af = _table("A_forget", tables.A_FORGET_TABLE)
    c, cb = {}, {}
    for i, j in combinations(POINTS, 2):
        others = [k for k in POINTS if k not in (i, j)]
        values = {af[a_label(i, j, k)] + b[b_label(i, j, k)] for k in others}
        if len(values) != 1:
            raise TableInconsistent(f"{c_label(i, j)} depends on k: {sorted(v.coords for v in values)}")
        c[c_label(i, j)] = values.pop()
        for k in others:
            cb[c_label(i, j, k)] = a[a_label(i, j)] + b[b_label(i, j, k)]
    out = {"B": b, "A": a, "A_forget": af,
           "C": GeneratorTable("C", c), "C_blowdown": GeneratorTable("C_blowdown", cb)}
    for label, row in tables.D45_TABLE.items():
        fam = lookup_family(label)
        if out[fam][label].coords != row:
            raise TableInconsistent(f"{label} disagrees with the D_45 table")
    return out


def lookup_family(label: str) -> str:
    if label.startswith("B_"):
        return "B"
    if label.startswith("A_"):
        return "A_forget" if ";" in label else "A"
    if label.startswith("C_"):
        return "C_blowdown" if ";" in label else "C"
    raise BadLabel(f"unknown class label {label!r}")


def sweep_generators(tabs: dict | None = None) -> dict[str, LatticeVector]:
    """The 95 classes A_ij, A_ij;k, B_ijk, in that order."""
    tabs = tabs or generator_tables()
    out = {}
    for fam in ("A", "A_forget", "B"):
        out.update(tabs[fam].entries)
    return out


_TERM = re.compile(r"\s*(\d*)\s*([ABC]_[0-9;]+)\s*")


def parse_combination(expr: str) -> dict[str, int]:
    """``"2A_14+A_24+B_256"`` -> ``{"A_14": 2, "A_24": 1, "B_256": 1}``."""
    out: dict[str, int] = {}
    for term in expr.split("+"):
        m = _TERM.fullmatch(term)
        if not m:
            raise BadLabel(f"cannot parse term {term!r}")
        out[m.group(2)] = out.get(m.group(2), 0) + int(m.group(1) or 1)
    return out


def evaluate_combination(expr, tabs: dict | None = None) -> LatticeVector:
    tabs = tabs or generator_tables()
    coeffs = parse_combination(expr) if isinstance(expr, str) else expr
    total = _vec((0,) * M06_CURVE.rank)
    for label, k in coeffs.items():
        total = total + tabs[lookup_family(label)][label] * k
    return total


# ---------------------------------------------------------------------------
# pushforwards


def apply_columns(columns, coords) -> tuple:
    """Image ``sum coords[k] * columns[k]`` of a vector under a column matrix."""
    out = [0] * len(columns[0])
    for c, col in zip(coords, columns):
        for i, x in enumerate(col):
            out[i] += c * x
    return tuple(out)


def j345_check(tabs: dict | None = None) -> dict:
    tabs = tabs or generator_tables()
    expected = (tabs["B"]["B_126"].coords, tabs["B"]["B_345"].coords)
    for k, (col, exp) in enumerate(zip(tables.J345_COLUMNS, expected), start=1):
        if tuple(col) != exp:
            raise PushforwardMismatch(f"(j_345)_* column {k} is {col}, expected {exp}")
    return {"columns": ["B_126", "B_345"]}


def m05_nef_curve_coords() -> list[tuple]:
    """Nef generators of M_{0,5} in the curve basis dual to (L, E_1..E_4)."""
    q = intersection_form("M05")
    return [linalg.mat_vec(q, v) for v in m05_nef_generators()]


def j45_orderings() -> list[tuple[int, ...]]:
    """Orderings of the M_{0,5} curve basis under which the printed
    ``(j_45)_*`` sends the nef generators onto the D_45 table.

    An ordering ``perm`` means column ``k`` of the matrix is the image of
    basis vector ``perm[k]``.
    """
    target = set(tables.D45_TABLE.values())
    xi = m05_nef_curve_coords()
    good = []
    for perm in permutations(range(5)):
        images = {apply_columns(tables.J45_COLUMNS, [v[p] for p in perm]) for v in xi}
        if images == target:
            good.append(perm)
    return good


def j45_check() -> dict:
    """Find the basis orderings for ``(j_45)_*`` that reproduce the D_45 table.

    The nef generators are symmetric under permuting E_1..E_4, so a valid
    ordering is determined only up to that symmetry; the check requires at
    least one ordering and that all of them put ``L`` first.
    """
    good = j45_orderings()
    if not good:
        raise PushforwardMismatch("no basis ordering reproduces the D_45 table")
    if any(p[0] != 0 for p in good):
        raise PushforwardMismatch(f"ambiguous ordering: {[p for p in good if p[0] != 0][0]}")
    perm = good[0]
    xi = m05_nef_curve_coords()
    rows = sorted(apply_columns(tables.J45_COLUMNS, [v[p] for p in perm]) for v in xi)
    return {"orderings": len(good), "ordering": perm, "rows": rows}


def pushforward_check() -> dict:
    return {"j345": j345_check(), "j45": j45_check()}


def c_relation_count(tabs: dict | None = None) -> dict:
    """Counts of the derived classes and relation evaluations."""
    tabs = tabs or generator_tables()
    per_pair = len(tabs["A"]) + len(tabs["A_forget"]) + len(tabs["C"]) + len(tabs["C_blowdown"])
    return {"nm1_dij_classes": per_pair,
            "c_ij_evaluations": 4 * len(tabs["C"]),
            "c_ijk_evaluations": len(tabs["C_blowdown"])}
