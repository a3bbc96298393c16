import pytest
from sympy import Poly, symbols

from dsl_algebra.algebra.matrep import (BiMatrix, bimonomials, commutant_dimension, cv_e0_basis, cv_e0_bruteforce,
                                        delta_rho, delta_w_rl, dt_constants, m_param, m_param_slice,
                                        rho_commutant_slice, rho_dt)
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import BiSeries
from dsl_algebra.algebra.words import E01
from dsl_algebra.exceptions import DimensionMismatchError


def test_delta_rho_low_degrees():
    assert delta_rho(1) == BiSeries(1, {(b"\x01", b""): 1, (b"", b"\x01"): 1})
    assert delta_rho(2) == BiSeries(2, {(b"\x01\x00", b""): 1, (b"", b"\x01\x00"): 1, (b"\x01", b"\x01"): -1})
    with pytest.raises(ValueError):
        delta_rho(0)


def test_delta_w_rl_degree_three():
    expected = BiSeries(3, {
        (b"\x01\x00\x00", b""): 1,
        (b"", b"\x01\x00\x00"): 1,
        (b"\x01", b"\x01\x00"): -1,
        (b"\x01\x00", b"\x01"): -1,
    })
    assert delta_w_rl(3) == expected
    assert delta_rho(3) == expected


@pytest.mark.parametrize("n", [1, 2, 4, 5])
def test_delta_rho_matches_twisted_coproduct(n):
    assert delta_rho(n) == delta_w_rl(n)


def test_rho_dt_on_letters_and_unit():
    consts = dt_constants(2)
    assert rho_dt(Series.one(E01, 2)) == BiMatrix.identity(3, 2)
    assert rho_dt(Series.letter(E01, 0, 2)) == consts.rho0
    assert rho_dt(Series.letter(E01, 1, 2)) == consts.rho1


def test_rho_dt_stabilizer_relations():
    c = dt_constants(3)
    assert (c.R_dt * c.rho1).is_zero()
    assert (c.rho1 * c.C_dt).is_zero()


def test_commutant_of_rho1():
    dim, space = commutant_dimension([dt_constants(1).rho1], 0)
    assert dim == 3
    assert space == m_param_slice(0)
    _, space = commutant_dimension([dt_constants(2).rho1], 1)
    assert space == m_param_slice(1)


@pytest.mark.parametrize("d,dim", [(0, 1), (1, 1), (2, 3)])
def test_commutant_of_both_generators(d, dim):
    consts = dt_constants(d + 1)
    found, space = commutant_dimension([consts.rho0, consts.rho1], d)
    assert found == dim
    assert space == rho_commutant_slice(d)


def test_commutant_of_identity_is_everything():
    dim, _ = commutant_dimension([BiMatrix.identity(3, 2)], 1)
    assert dim == 9 * len(bimonomials(1))
    with pytest.raises(ValueError):
        commutant_dimension([], 1)


def test_centralizer_of_e0():
    assert cv_e0_basis(1).dim == 3
    for d in range(3):
        assert cv_e0_basis(d) == cv_e0_bruteforce(d)


def test_m_param():
    u, v = symbols("u v")
    assert m_param(Poly(1, u, v), BiMatrix.zero(2, 2, 3), 3) == BiMatrix.identity(3, 3)
    with pytest.raises(DimensionMismatchError):
        m_param(Poly(1, u, v), BiMatrix.zero(3, 3, 3), 3)
