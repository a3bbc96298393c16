from fractions import Fraction

import pytest

from dsl_algebra.exceptions import DimensionMismatchError
from dsl_algebra.linalg.exact import (QMatrix, Subspace, nullspace, rank, rref, solve, subspace_contains,
                                      subspace_equal)


def test_rank_of_dependent_rows():
    assert rank(QMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(QMatrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rank(QMatrix(0, 3)) == 0


def test_rref_is_exact():
    rows, pivots = rref(QMatrix.from_rows([[2, 1], [4, 3]]))
    assert pivots == (0, 1)
    assert rows == [{0: Fraction(1)}, {1: Fraction(1)}]


def test_nullspace_basis_is_reduced():
    space = nullspace(QMatrix.from_rows([[1, 1]]))
    assert space.dim == 1
    assert space.basis == ((Fraction(1), Fraction(-1)),)


def test_solve_returns_none_when_inconsistent():
    m = QMatrix.from_rows([[1, 0], [0, 0]])
    assert solve(m, [1, 1]) is None
    assert solve(m, [2, 0]) == [Fraction(2), Fraction(0)]


def test_from_columns_places_entries():
    m = QMatrix.from_columns([{0: 1}, {1: Fraction(1, 2)}], 2)
    assert m[0, 0] == 1 and m[1, 1] == Fraction(1, 2) and m[0, 1] == 0


def test_subspace_is_canonical():
    assert Subspace(2, [[2, 2]]) == Subspace(2, [[Fraction(1, 3), Fraction(1, 3)]])
    assert Subspace(2, [[2, 2]]).basis == ((Fraction(1), Fraction(1)),)


def test_subspace_inclusion():
    line = Subspace(3, [[1, 0, 0]])
    assert subspace_contains(line, Subspace.full(3))
    assert not subspace_contains(Subspace.full(3), line)
    assert subspace_contains(Subspace.zero(3), line)
    assert subspace_equal(Subspace(3, [[1, 1, 0], [1, -1, 0]]), Subspace(3, [[1, 0, 0], [0, 1, 0]]))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        Subspace(2, [[1, 2, 3]])
    with pytest.raises(DimensionMismatchError):
        QMatrix.from_rows([[1, 2]]).apply([1])
