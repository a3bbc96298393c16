import pytest

from dsl_algebra.algebra.inertia import (b_of, decompose_right, e_inf, from_einf, ginert_component,
                                         is_push_invariant, lie_bracket_span_rank, lie_theta, push, solve_b,
                                         swap_zero_inf, to_einf)
from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, EINF
from dsl_algebra.exceptions import ConstantTermError, NotInertError, NotLieError


def einf_letters(n):
    return Series.letter(EINF, 0, n), Series.letter(EINF, 1, n)


def inert_degree_three():
    e0, ei = einf_letters(3)
    return from_einf(-lie_bracket(lie_bracket(e0, ei), ei))


def test_push_rotates_blocks():
    assert push(Series(E01, 2, {b"\x00\x01": 1})) == Series(E01, 2, {b"\x01\x00": 1})


def test_einf_presentation_round_trip():
    a = Series(E01, 3, {b"\x00\x01\x01": 2, b"\x01": -1})
    assert from_einf(to_einf(a)) == a
    assert swap_zero_inf(swap_zero_inf(a)) == a
    assert swap_zero_inf(Series.letter(E01, 0, 1)) == e_inf(1)


@pytest.mark.parametrize("n,dim", [(2, 0), (3, 1), (4, 0)])
def test_ginert_dimensions(n, dim):
    assert ginert_component(n).dim == dim


def test_ginert_degree_three():
    a = inert_degree_three()
    assert is_push_invariant(a)
    assert lyndon_basis(E01, 3).span([a]) == ginert_component(3)


def test_decompose_right():
    e0, ei = einf_letters(2)
    a = e0 * ei - ei * e0
    a_inf, a_0 = decompose_right(a)
    assert a_inf == e0.with_max_degree(2) and a_0 == -ei
    with pytest.raises(ConstantTermError):
        decompose_right(Series.one(EINF, 2))


def test_b_of_degree_three():
    a = inert_degree_three()
    e0, ei = einf_letters(3)
    b = b_of(a)
    assert b == from_einf(-lie_bracket(e0, lie_bracket(e0, ei)))
    relation = (lie_bracket(a.with_max_degree(4), Series.letter(E01, 0, 4))
                + lie_bracket(b.with_max_degree(4), e_inf(4)))
    assert relation.is_zero()
    assert solve_b(a) == b


def test_b_of_without_inertness():
    e0, ei = einf_letters(2)
    a = from_einf(lie_bracket(e0, ei))
    assert b_of(a) == Series(E01, 2, {b"\x00\x00": 1})
    assert solve_b(a) is None


def test_lie_theta():
    a = inert_degree_three()
    assert lie_theta(a) == a
    assert lie_theta(Series.zero(E01, 3)).is_zero()
    e0, e1 = Series.letter(E01, 0, 2), Series.letter(E01, 1, 2)
    with pytest.raises(NotInertError):
        lie_theta(lie_bracket(e0, e1))
    with pytest.raises(NotLieError):
        lie_theta(Series(E01, 2, {b"\x00\x01": 1}))


def test_lie_bracket_span_rank():
    assert lie_bracket_span_rank(2) == (2, 2)
    rank, dim = lie_bracket_span_rank(3)
    assert (rank, dim) == (3, 3)
