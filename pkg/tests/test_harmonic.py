from fractions import Fraction

import pytest
from sympy import Poly, QQ, Rational

from dsl_algebra.algebra.harmonic import (T, delta_m, delta_w, dmr0_component, dmr0_component_oracle,
                                          gamma_correction, gamma_series, is_m_primitive, project_to_m,
                                          sigma_series, w_factorize)
from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.tensor import WTensor
from dsl_algebra.algebra.words import E01
from dsl_algebra.exceptions import ConstantTermError, NotWAdmissibleError

E1, Y2 = b"\x01", b"\x00\x01"


def test_w_factorize():
    assert w_factorize(b"\x00\x01\x01") == (2, 1)
    assert w_factorize(b"\x00\x00\x01") == (3,)
    with pytest.raises(NotWAdmissibleError):
        w_factorize(b"\x01\x00")


def test_delta_w_on_generators():
    assert delta_w(Series(E01, 1, {E1: 1})) == WTensor(1, {(E1, b""): 1, (b"", E1): 1})
    expected = WTensor(2, {(Y2, b""): 1, (b"", Y2): 1, (E1, E1): -1})
    assert delta_w(Series(E01, 2, {Y2: 1})) == expected


def test_delta_w_rejects_words_ending_in_e0():
    with pytest.raises(NotWAdmissibleError):
        delta_w(Series(E01, 1, {b"\x00": 1}))
    with pytest.raises(NotWAdmissibleError):
        WTensor(2, {(b"\x00", b""): 1})


def test_project_to_m_drops_e0_endings():
    a = Series(E01, 2, {b"\x01\x00": 1, Y2: 2})
    assert project_to_m(a) == Series(E01, 2, {Y2: 2})
    assert delta_m(a) == delta_w(Series(E01, 2, {Y2: 2}))


def test_primitivity():
    assert is_m_primitive(Series(E01, 1, {E1: 1}))
    assert not is_m_primitive(Series(E01, 2, {Y2: 1}))
    with pytest.raises(ConstantTermError):
        is_m_primitive(Series.one(E01, 2))


def test_gamma_correction():
    e0, e1 = Series.letter(E01, 0, 3), Series.letter(E01, 1, 3)
    a = lie_bracket(e0, lie_bracket(e0, e1))
    assert gamma_correction(a) == Series(E01, 3, {b"\x01\x01\x01": Fraction(1, 3)})
    assert gamma_correction(Series.zero(E01, 3)).is_zero()
    with pytest.raises(ConstantTermError):
        gamma_correction(Series.one(E01, 3))


@pytest.mark.parametrize("n,dim", [(2, 0), (3, 1), (4, 0), (5, 1)])
def test_dmr0_dimensions(n, dim):
    assert dmr0_component(n).dim == dim


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dmr0_routes_agree(n):
    assert dmr0_component_oracle(n) == dmr0_component(n)


def test_dmr0_degree_three_is_the_depth_one_element():
    space = dmr0_component(3)
    (a,) = lyndon_basis(E01, 3).elements(space)
    e0, e1 = Series.letter(E01, 0, 3), Series.letter(E01, 1, 3)
    target = lie_bracket(e0, lie_bracket(e0, e1)) - lie_bracket(e1, lie_bracket(e1, e0))
    assert lyndon_basis(E01, 3).span([a]) == lyndon_basis(E01, 3).span([target])


def test_gamma_and_sigma_of_a_commutator():
    e0, e1 = Series.letter(E01, 0, 4), Series.letter(E01, 1, 4)
    g = lie_bracket(e0, e1).exp()
    half, eighth = Rational(1, 2), Rational(1, 8)
    assert gamma_series(g, 4) == Poly(1 - half * T ** 2 + eighth * T ** 4, T, domain=QQ)
    assert sigma_series(g, 4) == Poly(1 + half * T ** 2 + eighth * T ** 4, T, domain=QQ)


def test_gamma_needs_trivial_e1_coefficient():
    with pytest.raises(ValueError):
        gamma_series(Series.letter(E01, 1, 3).exp(), 3)
    assert gamma_series(Series.one(E01, 3), 3) == Poly(1, T, domain=QQ)
