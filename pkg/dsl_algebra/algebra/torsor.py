"""
Constructive factorization of pairs (a, b) with a·x = (x + z)·b.

The group of triples (h, (gamma, c)) acts by
    (a, b, w) -> (h a (gamma + x c), h b (gamma + c x), h w h⁻¹)
and preserves a·x = w·b. Starting from w = x + z, each step n kills the
degree-n parts of a and b (and the degree n+1 part of w) with an element
(exp(-u), (1, -c)), where c has degree n-1 and u is Lie of degree n.
"""
import logging
from fractions import Fraction
from typing import List, NamedTuple

from dsl_algebra.algebra.lie import is_lie_series, lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import XY, words_of_length
from dsl_algebra.exceptions import AlphabetMismatchError, ConstantTermError, NotLieError, TorsorPreconditionError
from dsl_algebra.linalg.exact import QMatrix, solve

logger = logging.getLogger(__name__)


class TorsorFactorization(NamedTuple):
    h: Series
    gamma: Fraction
    c: Series


def _step(a: Series, b: Series, w: Series, n: int, n_max: int):
    """Solve x c + u = a_n, c x + u = b_n, [u, x] = w_(n+1) for (c, u)."""
    x = Series.letter(XY, "x", n_max + 1)
    prev_words = words_of_length(2, n - 1)
    words_n = words_of_length(2, n)
    words_next = words_of_length(2, n + 1) if n < n_max else ()
    basis = lyndon_basis(XY, n)
    offsets = (0, len(words_n), 2 * len(words_n))
    index_n = {v: i for i, v in enumerate(words_n)}
    index_next = {v: i for i, v in enumerate(words_next)}

    def column(first: Series, second: Series, third: Series):
        col = {offsets[0] + index_n[v]: c for v, c in first.terms.items()}
        col.update({offsets[1] + index_n[v]: c for v, c in second.terms.items()})
        if words_next:
            col.update({offsets[2] + index_next[v]: c for v, c in third.terms.items()})
        return col

    zero = Series.zero(XY, n_max + 1)
    columns = []
    for v in prev_words:
        c = Series(XY, n_max + 1, {v: 1})
        columns.append(column(x * c, c * x, zero))
    for entry in basis.entries:
        u = entry.expansion.with_max_degree(n_max + 1)
        columns.append(column(u, u, lie_bracket(u, x)))
    rhs = [a.coeff(v) for v in words_n] + [b.coeff(v) for v in words_n]
    rhs += [w.coeff(v) for v in words_next]
    rows = 2 * len(words_n) + len(words_next)
    solution = solve(QMatrix.from_columns(columns, rows), rhs)
    if solution is None:
        return None
    c = Series(XY, n_max, dict(zip(prev_words, solution[:len(prev_words)])))
    u = basis.from_coords(solution[len(prev_words):], n_max)
    return c, u


def torsor_factor(a: Series, b: Series, z: Series, n_max: int) -> TorsorFactorization:
    """(h, gamma, c) with a = h(gamma + x c), b = h(gamma + c x), x + z = h x h⁻¹."""
    for s in (a, b, z):
        if s.alphabet != XY:
            raise AlphabetMismatchError("torsor factorization works over {x, y}")
    if z.constant_term or any(d < 2 for d in z.degrees()) or not is_lie_series(z):
        raise NotLieError("z must be a Lie series concentrated in degrees >= 2")
    top = n_max + 1
    a, b, z = a.with_max_degree(top), b.with_max_degree(top), z.with_max_degree(top)
    epsilon = a.constant_term
    if not epsilon or b.constant_term != epsilon:
        raise ConstantTermError("a and b need the same nonzero constant term")
    x = Series.letter(XY, "x", top)
    if not (a * x - (x + z) * b).is_zero():
        raise TorsorPreconditionError(f"a·x = (x+z)·b fails through degree {top}")
    a, b, z = a.truncate(n_max), b.truncate(n_max), z.truncate(n_max)
    x = x.truncate(n_max)
    w = x + z

    a, b = a.scale(1 / epsilon), b.scale(1 / epsilon)
    big_h = Series.one(XY, n_max)
    big_gamma = 1 / epsilon
    big_c = Series.zero(XY, n_max)
    for n in range(1, n_max + 1):
        step = _step(a, b, w, n, n_max)
        if step is None:
            raise TorsorPreconditionError(f"degree {n} step has no solution")
        c, u = step
        h = (-u).exp()
        a = h * a * (Series.one(XY, n_max) - x * c)
        b = h * b * (Series.one(XY, n_max) - c * x)
        w = h.conjugate(w)
        big_h = h * big_h
        big_c = big_c - c.scale(big_gamma) - big_c * x * c
        logger.debug("torsor step %d: |c| = %d, |u| = %d", n, len(c.terms), len(u.terms))

    right = Series.scalar(big_gamma, XY, n_max) + x * big_c
    gamma = 1 / big_gamma
    c_out = (big_c * right.inverse()).scale(-gamma)
    return TorsorFactorization(big_h.inverse(), gamma, c_out)


def torsor_identities(a: Series, b: Series, z: Series, result: TorsorFactorization) -> List[bool]:
    """Truth of a = h(γ + x c), b = h(γ + c x), x + z = h x h⁻¹."""
    n = min(a.max_degree, b.max_degree, z.max_degree, result.h.max_degree, result.c.max_degree)
    x = Series.letter(XY, "x", n)
    gamma = Series.scalar(result.gamma, XY, n)
    h, c = result.h.truncate(n), result.c.truncate(n)
    return [
        a.truncate(n) == h * (gamma + x * c),
        b.truncate(n) == h * (gamma + c * x),
        x + z.truncate(n) == h.conjugate(x),
    ]
