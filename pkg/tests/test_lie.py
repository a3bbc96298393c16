from fractions import Fraction

import pytest

from dsl_algebra.algebra.lie import (bracketing, ihara_bracket, is_lie, is_lie_series, lyndon_basis, lyndon_words,
                                     standard_factorization, witt_number)
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, XY
from dsl_algebra.exceptions import NotLieError


def e(i, n=3):
    return Series.letter(E01, i, n)


def test_lyndon_words_and_witt_numbers():
    assert lyndon_words(2, 3) == (b"\x00\x00\x01", b"\x00\x01\x01")
    assert [witt_number(2, n) for n in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert all(lyndon_basis(E01, n).dim == witt_number(2, n) for n in range(1, 7))


def test_standard_factorization():
    assert standard_factorization(b"\x00\x00\x01") == (b"\x00", b"\x00\x01")
    assert bracketing(b"\x00\x00\x01", E01) == "[e0,[e0,e1]]"


def test_coordinates_round_trip():
    basis = lyndon_basis(E01, 3)
    a = lie_bracket(e(0), lie_bracket(e(0), e(1)))
    assert basis.to_coords(a) == [Fraction(1), Fraction(0)]
    b = lie_bracket(lie_bracket(e(0), e(1)), e(1)).scale(Fraction(2, 3))
    assert basis.from_coords(basis.to_coords(b)) == b


def test_to_coords_rejects_non_lie():
    with pytest.raises(NotLieError):
        lyndon_basis(E01, 2).to_coords(Series(E01, 2, {b"\x00\x01": 1}))


def test_lie_recognition():
    assert is_lie(lie_bracket(e(0), e(1)))
    assert not is_lie(Series(E01, 3, {b"\x00\x01": 1}))
    assert not is_lie(Series.one(E01, 3))
    assert is_lie(Series.zero(E01, 3))
    assert is_lie_series(e(0) + lie_bracket(e(0), e(1)))


def test_ihara_bracket_of_letters_vanishes():
    assert ihara_bracket(e(0), e(1)).is_zero()


def test_ihara_bracket_is_antisymmetric_and_lie():
    a = lie_bracket(e(0, 4), e(1, 4))
    b = e(1, 4)
    ab = ihara_bracket(a, b)
    assert (ab + ihara_bracket(b, a)).is_zero()
    assert is_lie(ab)


def test_ihara_bracket_requires_lie_inputs():
    with pytest.raises(NotLieError):
        ihara_bracket(Series(E01, 3, {b"\x00\x01": 1}), e(0))


def test_lyndon_basis_over_xy():
    basis = lyndon_basis(XY, 2)
    assert basis.entries[0].expansion == Series(XY, 2, {b"\x00\x01": 1, b"\x01\x00": -1})
