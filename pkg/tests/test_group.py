import random

import pytest

from dsl_algebra.algebra.group import (GroupElement, abelianization, circledast, group_theta, inertia_residual,
                                       make_inert_group_element, solve_h)
from dsl_algebra.algebra.harmonic import sigma_series, truncate_poly
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.words import E01
from dsl_algebra.exceptions import AlgebraError, ConstantTermError
from dsl_algebra.utils.sampling import random_lie_series


def random_element(rng, n=4):
    return GroupElement.from_log(random_lie_series(E01, range(2, n + 1), rng, n))


def commutator_element(n=4):
    return GroupElement.from_log(Series(E01, n, {b"\x00\x01": 1, b"\x01\x00": -1}))


def test_circledast_identity_and_associativity():
    rng = random.Random(7)
    one = GroupElement.identity(4)
    g, h, k = (random_element(rng) for _ in range(3))
    assert circledast(one, g) == g
    assert circledast(g, one) == g
    assert circledast(circledast(g, h), k) == circledast(g, circledast(h, k))


def test_group_element_validation():
    with pytest.raises(AlgebraError):
        GroupElement(Series.letter(E01, 0, 3).exp())
    with pytest.raises(AlgebraError):
        GroupElement(Series(E01, 3, {b"": 1, b"\x00\x01": 1}))
    with pytest.raises(ConstantTermError):
        GroupElement(Series.zero(E01, 3))


def test_abelianization():
    assert abelianization(Series.letter(E01, 0, 3).exp()) == (1, 0)
    assert abelianization(commutator_element().series) == (0, 0)


def test_solve_h_on_non_inert_element():
    assert solve_h(commutator_element()) is None
    assert group_theta(commutator_element()) is None


def test_theta_of_identity():
    theta = group_theta(GroupElement.identity(4))
    assert theta is not None
    assert theta.max_degree == 3
    assert theta == GroupElement.identity(3)


def test_inert_element_and_involution():
    g = make_inert_group_element(1729, 4)
    assert g is not None
    h = solve_h(g)
    assert h is not None
    assert inertia_residual(g.series.truncate(3), h.series).is_zero()
    theta = group_theta(g)
    twice = group_theta(theta)
    assert twice is not None
    assert twice == g


def test_sigma_multiplicative():
    rng = random.Random(11)
    g, h = random_element(rng), random_element(rng)
    product = truncate_poly(sigma_series(g.series, 4) * sigma_series(h.series, 4), 4)
    assert sigma_series(circledast(g, h).series, 4) == product
