"""
Rank checks for three short complexes.

Each complex A -> B -> C is sliced at a degree n, both maps are assembled
as exact matrices and the sequence is exact at B iff
dim ker(B -> C) = rank(A -> B).
"""
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Sequence

from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.matrep import bimonomials, e, f, f_inf
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.tensor import BiSeries
from dsl_algebra.algebra.words import XY, words_of_length
from dsl_algebra.linalg.exact import QMatrix, rank

logger = logging.getLogger(__name__)

COMPLEXES = ("e1f1", "e0finf", "appendixB")


class ExactnessResult(NamedTuple):
    which: str
    degree: int
    source_dim: int
    middle_dim: int
    target_dim: int
    rank_first: int
    rank_second: int
    kernel_second: int
    composite_zero: bool
    exact: bool


Columns = List[Dict[int, Fraction]]


def _composite_zero(first: Columns, second: Columns) -> bool:
    for column in first:
        image: Dict[int, Fraction] = defaultdict(Fraction)
        for mid, value in column.items():
            for row, entry in second[mid].items():
                image[row] += value * entry
        if any(image.values()):
            return False
    return True


def _result(which: str, n: int, first: Columns, middle_dim: int, second: Columns,
            target_dim: int) -> ExactnessResult:
    rank_first = rank(QMatrix.from_columns(first, middle_dim))
    rank_second = rank(QMatrix.from_columns(second, target_dim))
    kernel = middle_dim - rank_second
    result = ExactnessResult(which, n, len(first), middle_dim, target_dim, rank_first, rank_second,
                             kernel, _composite_zero(first, second), kernel == rank_first)
    logger.debug("exactness %s at degree %d: ker %d, im %d", which, n, kernel, rank_first)
    return result


def _bi_coords(x: BiSeries, index: Dict, offset: int = 0) -> Dict[int, Fraction]:
    return {offset + index[k]: c for k, c in x.terms.items()}


def _e1f1(n: int) -> ExactnessResult:
    top = n + 1
    source, middle, target = bimonomials(n - 1), bimonomials(n), bimonomials(n + 1)
    m_index = {k: i for i, k in enumerate(middle)}
    t_index = {k: i for i, k in enumerate(target)}
    e1, f1 = e(1, top), f(1, top)
    first = []
    for key in source:
        x = BiSeries(top, {key: 1})
        column = _bi_coords(f1 * x, m_index)
        column.update(_bi_coords(e1 * x, m_index, len(middle)))
        first.append(column)
    second = []
    for key in middle:
        second.append(_bi_coords(e1 * BiSeries(top, {key: 1}), t_index))
    for key in middle:
        second.append(_bi_coords(-(f1 * BiSeries(top, {key: 1})), t_index))
    return _result("e1f1", n, first, 2 * len(middle), second, len(target))


def _e0finf(n: int) -> ExactnessResult:
    top = n + 1
    middle, target = bimonomials(n), bimonomials(n + 1)
    m_index = {k: i for i, k in enumerate(middle)}
    t_index = {k: i for i, k in enumerate(target)}
    s = e(0, top) + f_inf(top)
    first = []
    for i in range(n + 1):
        phi = BiSeries.scalar(1, top)
        for _ in range(i):
            phi = phi * e(0, top)
        for _ in range(n - i):
            phi = phi * f_inf(top)
        column = _bi_coords(phi, m_index)
        column.update(_bi_coords(phi, m_index, len(middle)))
        first.append(column)
    for key in bimonomials(n - 1):
        gamma = BiSeries(top, {key: 1})
        column = _bi_coords(gamma * s, m_index)
        column.update(_bi_coords(s * gamma, m_index, len(middle)))
        first.append(column)
    second = []
    for key in middle:
        second.append(_bi_coords(s * BiSeries(top, {key: 1}), t_index))
    for key in middle:
        second.append(_bi_coords(-(BiSeries(top, {key: 1}) * s), t_index))
    return _result("e0finf", n, first, 2 * len(middle), second, len(target))


def _appendix_b(n: int) -> ExactnessResult:
    top = n + 1
    lie_n, lie_next = lyndon_basis(XY, n), lyndon_basis(XY, n + 1)
    words_prev, words_n, words_next = (words_of_length(2, n - 1), words_of_length(2, n),
                                       words_of_length(2, n + 1))
    n_index = {w: i for i, w in enumerate(words_n)}
    t_index = {w: i for i, w in enumerate(words_next)}
    x = Series.letter(XY, "x", top)
    middle_dim = 2 * len(words_n) + lie_next.dim

    def middle_column(a: Series, b: Series, z_coords: Sequence[Fraction]) -> Dict[int, Fraction]:
        column = {n_index[w]: c for w, c in a.terms.items()}
        column.update({len(words_n) + n_index[w]: c for w, c in b.terms.items()})
        column.update({2 * len(words_n) + i: c for i, c in enumerate(z_coords) if c})
        return column

    first = []
    for w in words_prev:
        c = Series(XY, top, {w: 1})
        first.append(middle_column(x * c, c * x, [Fraction(0)] * lie_next.dim))
    for entry in lie_n.entries:
        u = entry.expansion.with_max_degree(top)
        z = lie_next.to_coords(lie_bracket(u, x))
        first.append(middle_column(u, u, z))

    second = []
    for w in words_n:
        second.append({t_index[v]: c for v, c in (Series(XY, top, {w: 1}) * x).terms.items()})
    for w in words_n:
        second.append({t_index[v]: -c for v, c in (x * Series(XY, top, {w: 1})).terms.items()})
    for entry in lie_next.entries:
        second.append({t_index[v]: -c for v, c in entry.expansion.terms.items()})
    return _result("appendixB", n, first, middle_dim, second, len(words_next))


_BUILDERS: Dict[str, Callable[[int], ExactnessResult]] = {
    "e1f1": _e1f1,
    "e0finf": _e0finf,
    "appendixB": _appendix_b,
}


def exactness_check(which: str, n: int) -> ExactnessResult:
    if which not in _BUILDERS:
        raise ValueError(f"unknown complex {which!r}; expected one of {', '.join(COMPLEXES)}")
    if n < 1:
        raise ValueError("exactness is checked in degrees n >= 1")
    return _BUILDERS[which](n)


def exactness_table(which: str, degrees: Sequence[int]) -> List[ExactnessResult]:
    return [exactness_check(which, n) for n in degrees]
