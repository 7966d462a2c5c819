
import pytest

from effcone.cone import LatticeVector
from effcone.errors import BadLabel, BasisMismatch
from effcone.moduli.lattice import (
    FSIGMA, M05, M06_CURVE, M06_DIVISOR, BoundaryLabel, FixedPointLabel, boundary_class,
    boundary_labels, canonical_class, div, fixed_class, fixed_labels, pairing, surface_pairing,
)
from effcone.moduli.surfaces import (
    fsigma_class, fsigma_curve_generators, fsigma_semiample_generators, fsigma_semiample_orbits,
    m05_effective_generators, m05_nef_generators, s4_orbit,
)


def unit(i, n=16):
    return tuple(1 if k == i else 0 for k in range(n))


def test_bases():
    assert M06_DIVISOR.rank == M06_CURVE.rank == 16
    assert M06_DIVISOR.labels[:7] == ("L", "E1", "E2", "E3", "E4", "E5", "E12")
    assert M05.rank == 5 and FSIGMA.rank == 7
    assert FSIGMA.labels == ("H", "G12", "G13", "G14", "G23", "G24", "G34")


def test_boundary_classes():
    assert boundary_class("D_16").coords == unit(1)
    assert boundary_class("D_126") == boundary_class("D_345")
    assert boundary_class("D_345").coords == unit(6)
    assert boundary_class("D_45") == div(L=1, E1=-1, E2=-1, E3=-1, E12=-1, E13=-1, E23=-1)


def test_boundary_labels_are_canonical():
    labels = boundary_labels()
    assert len(labels) == 25 and len(set(labels)) == 25
    assert str(BoundaryLabel.parse("D_3456")) == "D_12"
    assert str(BoundaryLabel.parse("D_456")) == "D_123"
    for bad in ("D_1", "D_11", "D_17", "D_x"):
        with pytest.raises(BadLabel):
            BoundaryLabel.parse(bad)


def test_fixed_classes():
    e = {f"E{i}": -1 for i in range(1, 6)}
    assert fixed_class("F_(12)(34)(56)") == div(L=2, **e, E13=-1, E14=-1, E23=-1, E24=-1)
    assert fixed_class("F_(13)(24)(56)") == div(L=2, **e, E12=-1, E14=-1, E23=-1, E34=-1)
    classes = {fixed_class(f).coords for f in fixed_labels()}
    assert len(fixed_labels()) == 15 and len(classes) == 15
    with pytest.raises(BadLabel):
        FixedPointLabel.parse("F_(12)(34)")
    with pytest.raises(BadLabel):
        FixedPointLabel.parse("F_(12)(13)(56)")


def test_fixed_label_conjugation():
    f = FixedPointLabel.parse("F_(12)(34)(56)")
    assert str(f.conjugate((2, 3, 1, 4, 5, 6))) == "F_(14)(23)(56)"
    assert FixedPointLabel.from_permutation(f.permutation()) == f


def _curve(coords):
    return LatticeVector(tuple(coords), M06_CURVE.tag)


def test_canonical_degrees():
    minus_k = -canonical_class()
    assert -pairing(canonical_class(), _curve(unit(0))) == 4
    assert pairing(minus_k, _curve((3, 0, 0, 0, 0, 0) + (1,) * 10)) == 2
    assert pairing(minus_k, _curve((5, 0, 0, 0, 0, 2, 0, 1, 2, 1, 2, 3, 0, 0, 1, 0))) == 6
    b126 = _curve(tuple(-1 if i == 6 else 0 for i in range(16)))
    assert pairing(minus_k, b126) == 1


def test_pairing_rules():
    e1 = div(E1=1)
    assert pairing(e1, _curve(unit(1))) == 1
    assert pairing(div(L=1), _curve(unit(1))) == 0
    assert pairing(_curve(unit(1)), e1) == 1
    with pytest.raises(BasisMismatch):
        pairing(e1, e1)
    with pytest.raises(BasisMismatch):
        pairing(e1, M05.vector({"L": 1}))


def test_surface_pairing():
    assert surface_pairing("Fsigma", fsigma_class(1, {}), fsigma_class(1, {})) == 1
    c = fsigma_class(1, {(1, 2): 1, (3, 4): 1})
    assert surface_pairing("Fsigma", c, c) == -1
    c = fsigma_class(1, {(1, 2): 1, (1, 3): 1, (1, 4): 1})
    assert surface_pairing("Fsigma", c, c) == -2
    with pytest.raises(BasisMismatch):
        surface_pairing("M06", c, c)


def test_m05_generators():
    sigma = [v.coords for v in m05_effective_generators()]
    xi = [v.coords for v in m05_nef_generators()]
    assert len(sigma) == len(xi) == 10
    assert (0, 1, 0, 0, 0) in sigma and (1, -1, -1, 0, 0) in sigma
    assert (2, -1, -1, -1, -1) in xi


def test_fsigma_generators():
    assert len(fsigma_curve_generators()) == 13
    assert [len(o) for o in fsigma_semiample_orbits()] == [1, 6, 4, 12, 3, 12]
    assert len(fsigma_semiample_generators()) == 38
    assert len(s4_orbit(3, {(1, 2): 2, (1, 3): 1, (2, 3): 1, (3, 4): 1})) == 12
