import random

import pytest

from dsl_algebra.algebra.kv_bridge import (TangentialDerivation, check_inert_equivalence, ds_component, f_to_F,
                                           ihara_bracket_xy, is_sder, iso_i, iso_i_inverse, nu,
                                           nu_bracket_comparison, nu_rank_on_ds, pullback_inert,
                                           push_invariant_image)
from dsl_algebra.algebra.lie import is_lie, lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, XY
from dsl_algebra.exceptions import AlphabetMismatchError, NotLieError
from dsl_algebra.utils.sampling import random_lie_element


def x(n=3):
    return Series.letter(XY, "x", n)


def y(n=3):
    return Series.letter(XY, "y", n)


def ds_three():
    (f,) = lyndon_basis(XY, 3).elements(ds_component(3))
    return f


def test_iso_i_on_letters():
    assert iso_i(x()) == Series.letter(E01, 0, 3)
    assert iso_i(y()) == -Series.letter(E01, 1, 3)
    f = lie_bracket(x(), lie_bracket(x(), y()))
    assert iso_i_inverse(iso_i(f)) == f
    with pytest.raises(AlphabetMismatchError):
        iso_i(Series.letter(E01, 0, 3))


def test_f_to_F_on_letters():
    assert f_to_F(x()) == -x() - y()
    assert f_to_F(y()) == -y()


def test_nu_of_zero_and_non_lie():
    assert nu(Series.zero(XY, 3)).is_zero()
    with pytest.raises(NotLieError):
        nu(Series.monomial(XY, "xy", 3))


@pytest.mark.parametrize("n,dim", [(2, 0), (3, 1), (4, 0)])
def test_ds_dimensions(n, dim):
    assert ds_component(n).dim == dim


def test_nu_on_ds_three():
    f = ds_three()
    assert nu_rank_on_ds(3) == 1
    derivation = nu(f)
    assert derivation.degree == 3
    assert (derivation.image_x + derivation.image_y).is_zero()
    assert is_sder(derivation)


def test_commutator_is_not_inert():
    f = lie_bracket(x(2), y(2))
    assert not check_inert_equivalence(f)
    assert not push_invariant_image(f)


def test_inert_criterion_agrees_with_push():
    rng = random.Random(5)
    for n in (2, 3, 4):
        samples = [random_lie_element(XY, n, rng) for _ in range(4)]
        samples += lyndon_basis(XY, n).elements(pullback_inert(n))
        for f in samples:
            assert check_inert_equivalence(f) == push_invariant_image(f)
    (inert,) = lyndon_basis(XY, 3).elements(pullback_inert(3))
    assert check_inert_equivalence(inert)


def test_commutator_is_antisymmetric():
    first = nu(lie_bracket(x(2), y(2)))
    second = nu(ds_three())
    forward = first.commutator(second)
    assert isinstance(forward, TangentialDerivation)
    assert forward.degree == 5
    assert forward == -second.commutator(first)


def test_ihara_bracket_xy_is_lie():
    f, g = lie_bracket(x(5), y(5)), ds_three().with_max_degree(5)
    bracket = ihara_bracket_xy(f, g).graded_component(5)
    assert is_lie(bracket)
    assert nu_bracket_comparison(f, f) == "both"
