import random

import pytest

from dsl_algebra.algebra.lie import is_lie_series
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.torsor import torsor_factor, torsor_identities
from dsl_algebra.algebra.words import E01, XY
from dsl_algebra.analyzers.torsor_analyzer import manufacture_instance
from dsl_algebra.exceptions import AlphabetMismatchError, ConstantTermError, NotLieError, TorsorPreconditionError

N = 4


def xy(word, coeff=1):
    return Series.monomial(XY, word, N, coeff)


def test_factor_of_simple_pair():
    one = Series.one(XY, N)
    result = torsor_factor(one + xy("xy"), one + xy("yx"), Series.zero(XY, N), N)
    assert result.gamma == 1
    assert result.h == one
    assert result.c == Series.letter(XY, "y", N)


def test_factor_of_manufactured_instance():
    a, b, z = manufacture_instance(random.Random(3), N)
    result = torsor_factor(a, b, z, N)
    assert all(torsor_identities(a, b, z, result))
    assert is_lie_series(result.h.log())


def test_scaled_pair_keeps_gamma():
    a = Series.scalar(2, XY, N) + xy("xy", 2)
    b = Series.scalar(2, XY, N) + xy("yx", 2)
    result = torsor_factor(a, b, Series.zero(XY, N), N)
    assert result.gamma == 2
    assert all(torsor_identities(a, b, Series.zero(XY, N), result))


def test_precondition_failures():
    one = Series.one(XY, N)
    zero = Series.zero(XY, N)
    with pytest.raises(TorsorPreconditionError):
        torsor_factor(one + xy("y"), one, zero, N)
    with pytest.raises(ConstantTermError):
        torsor_factor(xy("xy"), xy("yx"), zero, N)
    with pytest.raises(NotLieError):
        torsor_factor(one, one, xy("xy"), N)
    with pytest.raises(AlphabetMismatchError):
        torsor_factor(Series.one(E01, N), one, zero, N)


def test_precondition_checked_one_degree_past_truncation():
    one = Series.one(XY, N)
    with pytest.raises(TorsorPreconditionError, match="degree 5"):
        torsor_factor(one + xy("yyyy"), one, Series.zero(XY, N), N)


def test_manufactured_instance_is_known_one_degree_further():
    a, b, z = manufacture_instance(random.Random(5), N)
    assert a.max_degree == b.max_degree == z.max_degree == N + 1
    x = Series.letter(XY, "x", N + 1)
    assert (a * x - (x + z) * b).is_zero()
