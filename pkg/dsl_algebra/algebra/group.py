"""
The group (G, ⊛), the h_g solver and the group-level involution Θ.

G consists of group-like series over {e0, e1} with trivial abelianization.
With g ∈ G given at truncation N, only the degrees < N of h_g are pinned
down by Ad_g(e0) + e1 + Ad_h(e_inf) = 0, so solve_h and group_theta return
elements at truncation N - 1.
"""
import logging
import random
from fractions import Fraction
from typing import Optional, Tuple

from dsl_algebra.algebra.inertia import e_inf, ginert_component, swap_zero_inf
from dsl_algebra.algebra.lie import is_lie_series, lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, words_of_length
from dsl_algebra.exceptions import AlgebraError, AlphabetMismatchError, ConstantTermError
from dsl_algebra.linalg.exact import QMatrix, solve
from dsl_algebra.utils.sampling import random_subspace_element

logger = logging.getLogger(__name__)


class GroupElement:
    """A validated element of G: constant term 1, group-like, (g|e0) = (g|e1) = 0."""

    __slots__ = ("series",)

    def __init__(self, series: Series):
        if series.alphabet != E01:
            raise AlphabetMismatchError("group elements live over {e0, e1}")
        if series.constant_term != 1:
            raise ConstantTermError("group elements have constant term 1")
        if series.max_degree >= 1 and (series.coeff(b"\x00") or series.coeff(b"\x01")):
            raise AlgebraError("group elements have trivial abelianization")
        if not is_lie_series(series.log()):
            raise AlgebraError("series is not group-like")
        self.series = series

    @classmethod
    def identity(cls, max_degree: int) -> "GroupElement":
        return cls(Series.one(E01, max_degree))

    @classmethod
    def from_log(cls, log: Series) -> "GroupElement":
        return cls(log.exp())

    @property
    def max_degree(self) -> int:
        return self.series.max_degree

    def log(self) -> Series:
        return self.series.log()

    def truncate(self, n: int) -> "GroupElement":
        return GroupElement(self.series.truncate(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.series == other.series

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GroupElement(log={self.log().pretty()})"


def abelianization(g: Series) -> Tuple[Fraction, Fraction]:
    return g.coeff(b"\x00"), g.coeff(b"\x01")


def circledast(g: GroupElement, h: GroupElement) -> GroupElement:
    """(g ⊛ h)(e0, e1) = h(g e0 g⁻¹, e1) · g."""
    n = min(g.max_degree, h.max_degree)
    gs = g.series.truncate(n)
    images = {0: gs.conjugate(Series.letter(E01, 0, n)), 1: Series.letter(E01, 1, n)}
    return GroupElement(h.series.truncate(n).substitute(images) * gs)


def inertia_residual(g: Series, h: Series) -> Series:
    """Ad_g(e0) + e1 + Ad_h(e_inf)."""
    n = min(g.max_degree, h.max_degree)
    g, h = g.truncate(n), h.truncate(n)
    return g.conjugate(Series.letter(E01, 0, n)) + Series.letter(E01, 1, n) + h.conjugate(e_inf(n))


def _bracket_columns(n: int, other: Series):
    basis = lyndon_basis(E01, n)
    words = words_of_length(2, n + 1)
    index = {w: i for i, w in enumerate(words)}
    columns = []
    for entry in basis.entries:
        image = lie_bracket(entry.expansion.with_max_degree(n + 1), other)
        columns.append({index[w]: c for w, c in image.terms.items()})
    return columns, words


def solve_h(g: GroupElement) -> Optional[GroupElement]:
    """The h in G with Ad_g(e0) + e1 + Ad_h(e_inf) = 0, at truncation N - 1, or None."""
    n_max = g.max_degree
    target = -Series.letter(E01, 1, n_max) - g.series.conjugate(Series.letter(E01, 0, n_max))
    eta = Series.zero(E01, n_max)
    for d in range(2, n_max):
        residual = target - eta.exp().conjugate(e_inf(n_max))
        if not residual.truncate(d).is_zero():
            logger.debug("solve_h: residual survives in degree <= %d", d)
            return None
        columns, words = _bracket_columns(d, e_inf(d + 1))
        rhs = residual.graded_component(d + 1)
        x = solve(QMatrix.from_columns(columns, len(words)), [rhs.coeff(w) for w in words])
        if x is None:
            logger.debug("solve_h: degree %d system infeasible", d)
            return None
        eta = eta + lyndon_basis(E01, d).from_coords(x, n_max)
    if n_max >= 2:
        residual = target - eta.exp().conjugate(e_inf(n_max))
        if not residual.is_zero():
            return None
    return GroupElement(eta.exp().truncate(max(n_max - 1, 0)))


def group_theta(g: GroupElement) -> Optional[GroupElement]:
    """Θ(g) = s_(0,inf)(h_g), or None when g is not inert."""
    h = solve_h(g)
    if h is None:
        return None
    return GroupElement(swap_zero_inf(h.series))


def make_inert_group_element(seed: int, n_max: int) -> Optional[GroupElement]:
    """Random inert group element at truncation ``n_max``, or None if a correction step fails.

    Degree by degree, a random inert Lie component is corrected by a joint
    solve in (δa_d, η_d) so that the h-equation stays solvable.
    """
    rng = random.Random(seed)
    log_g = Series.zero(E01, n_max)
    eta = Series.zero(E01, n_max)
    e0 = Series.letter(E01, 0, n_max)
    e1 = Series.letter(E01, 1, n_max)
    for d in range(2, n_max + 1):
        basis = lyndon_basis(E01, d)
        a_rand = basis.from_coords(random_subspace_element(ginert_component(d), rng), n_max)
        if d == n_max:
            log_g = log_g + a_rand
            break
        residual = ((log_g + a_rand).exp().conjugate(e0) + e1 + eta.exp().conjugate(e_inf(n_max)))
        left, words = _bracket_columns(d, Series.letter(E01, 0, d + 1))
        right, _ = _bracket_columns(d, e_inf(d + 1))
        rhs = -residual.graded_component(d + 1)
        x = solve(QMatrix.from_columns(left + right, len(words)), [rhs.coeff(w) for w in words])
        if x is None:
            logger.warning("inert element generator: degree %d correction infeasible (seed %s)", d, seed)
            return None
        log_g = log_g + a_rand + basis.from_coords(x[:basis.dim], n_max)
        eta = eta + basis.from_coords(x[basis.dim:], n_max)
    return GroupElement(log_g.exp())
