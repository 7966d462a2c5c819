import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from effcone import linalg
from oracles import rref_rank


def test_primitive_divides_by_gcd_and_clears_denominators():
    assert linalg.primitive((4, -6, 8)) == (2, -3, 4)
    assert linalg.primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    with pytest.raises(ValueError):
        linalg.primitive((0, 0))


def test_kernel_of_rank_deficient_matrix():
    k = linalg.kernel([(1, 1, 0), (2, 2, 0)], 3)
    assert len(k) == 2
    for v in k:
        assert linalg.dot((1, 1, 0), v) == 0


def test_inverse_and_determinant():
    m = ((2, 1), (1, 1))
    assert linalg.determinant(m) == 1
    inv = linalg.inverse(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(2)
    with pytest.raises(linalg.LinalgError):
        linalg.inverse(((1, 2), (2, 4)))


def test_solve_inconsistent_returns_none():
    assert linalg.solve([(1, 0), (1, 0)], [1, 2]) is None
    assert linalg.solve([(1, 0), (0, 2)], [1, 2]) == (1, 1)


matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=6))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_bareiss_rank_matches_fraction_elimination(m):
    assert linalg.rank(m) == rref_rank(m)
    assert linalg.rank([[Fraction(x) for x in r] for r in m]) == rref_rank(m)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    assert linalg.rank(m) + len(linalg.kernel(m, len(m[0]))) == len(m[0])


def test_large_entries_stay_exact():
    rng = random.Random(5)
    big = [[rng.randint(-10**30, 10**30) for _ in range(6)] for _ in range(6)]
    assert linalg.rank(big) == rref_rank(big)
