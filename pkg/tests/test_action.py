from itertools import permutations

import pytest

from effcone import linalg
from effcone.moduli.action import (
    ADJACENT_TRANSPOSITIONS, IDENTITY, compose, cycle_notation, divisor_matrix, inverse,
    parse_permutation, s6_action_on_curves, s6_action_on_divisors,
)
from effcone.moduli.lattice import BoundaryLabel, M06_DIVISOR, boundary_class


def independent_matrix(perm):
    """Build M_sigma column by column from the basis: E_S = D_{S+6}, and
    L = D_45 + E_1 + E_2 + E_3 + E_12 + E_13 + E_23."""
    def img(label):
        return boundary_class(BoundaryLabel.parse(label).permute(perm)).coords

    cols = []
    for name in M06_DIVISOR.labels:
        if name == "L":
            parts = ["D_45", "D_16", "D_26", "D_36", "D_126", "D_136", "D_236"]
            cols.append(tuple(sum(img(p)[i] for p in parts) for i in range(16)))
        else:
            cols.append(img("D_" + name[1:] + "6"))
    return linalg.transpose(cols)


def test_permutation_helpers():
    p = parse_permutation("(123)(45)")
    assert p == (2, 3, 1, 5, 4, 6)
    assert cycle_notation(p) == "(123)(45)"
    assert compose(p, inverse(p)) == IDENTITY
    assert cycle_notation(IDENTITY) == "()"


@pytest.mark.parametrize("perm", [parse_permutation(s) for s in ("(12)", "(16)", "(123456)", "(14)(25)(36)")])
def test_matrix_matches_basis_construction(perm):
    assert divisor_matrix(perm) == independent_matrix(perm)


def test_every_group_element_matches_basis_construction():
    act = s6_action_on_divisors()
    assert set(act.elements) == set(permutations(range(1, 7)))
    for p, m in act.elements.items():
        assert m == independent_matrix(p)


def test_labels_compose_like_matrices():
    act = s6_action_on_divisors()
    a, b = parse_permutation("(1234)"), parse_permutation("(256)")
    assert linalg.mat_mul(act.matrix(a), act.matrix(b)) == act.matrix(compose(a, b))


def test_curve_action_is_inverse_transpose():
    d, c = s6_action_on_divisors(), s6_action_on_curves()
    for p in ADJACENT_TRANSPOSITIONS:
        assert linalg.mat_mul(linalg.transpose(c.matrix(p)), d.matrix(p)) == linalg.identity(16)
