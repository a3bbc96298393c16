"""
Bridge between the (x, y) presentation and special derivations.

i : x -> e0, y -> -e1 identifies the free Lie algebra on {x, y} with the one
on {e0, e1}. nu sends f~ to the tangential derivation y -> [y, F],
x -> -[y, F] where f(x, y) = f~(x, -y) and F(x, y) = f(-x-y, y).
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional

from dsl_algebra.algebra.harmonic import dmr0_component
from dsl_algebra.algebra.inertia import ginert_component, is_push_invariant
from dsl_algebra.algebra.lie import ihara_bracket, is_lie, lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, XY, words_of_length
from dsl_algebra.exceptions import AlphabetMismatchError, NotLieError
from dsl_algebra.linalg.exact import QMatrix, Subspace, rank, solve

logger = logging.getLogger(__name__)


def _require_xy(f: Series) -> None:
    if f.alphabet != XY:
        raise AlphabetMismatchError("expected a series over {x, y}")


def _x(n: int) -> Series:
    return Series.letter(XY, "x", n)


def _y(n: int) -> Series:
    return Series.letter(XY, "y", n)


def iso_i(f: Series) -> Series:
    """x -> e0, y -> -e1."""
    _require_xy(f)
    n = f.max_degree
    return f.substitute({"x": Series.letter(E01, 0, n), "y": Series.letter(E01, 1, n).scale(-1)})


def iso_i_inverse(a: Series) -> Series:
    if a.alphabet != E01:
        raise AlphabetMismatchError("expected a series over {e0, e1}")
    n = a.max_degree
    return a.substitute({0: _x(n), 1: _y(n).scale(-1)})


def alpha(f: Series) -> Series:
    """y -> -y."""
    _require_xy(f)
    n = f.max_degree
    return f.substitute({"x": _x(n), "y": -_y(n)})


def beta(f: Series) -> Series:
    """x -> -x - y."""
    _require_xy(f)
    n = f.max_degree
    return f.substitute({"x": -_x(n) - _y(n), "y": _y(n)})


def f_to_F(ftilde: Series) -> Series:
    return beta(alpha(ftilde))


class TangentialDerivation:
    """Derivation of the free algebra on {x, y} given by the images of x and y."""

    __slots__ = ("degree", "image_x", "image_y")

    def __init__(self, degree: int, image_x: Series, image_y: Series):
        _require_xy(image_x)
        _require_xy(image_y)
        self.degree = degree
        self.image_x = image_x
        self.image_y = image_y

    def rule(self) -> Dict[str, Series]:
        return {"x": self.image_x, "y": self.image_y}

    def apply(self, a: Series) -> Series:
        return a.derivation_apply(self.rule())

    def commutator(self, other: "TangentialDerivation") -> "TangentialDerivation":
        """[D1, D2] = D1∘D2 - D2∘D1 as a derivation."""
        top = self.degree + other.degree + 1
        first, second = self.lifted(top), other.lifted(top)
        return TangentialDerivation(
            self.degree + other.degree,
            first.apply(second.image_x) - second.apply(first.image_x),
            first.apply(second.image_y) - second.apply(first.image_y),
        )

    def lifted(self, max_degree: int) -> "TangentialDerivation":
        """Same images retagged at a higher truncation; images are polynomials."""
        return TangentialDerivation(self.degree, self.image_x.with_max_degree(max_degree),
                                    self.image_y.with_max_degree(max_degree))

    def is_zero(self) -> bool:
        return self.image_x.is_zero() and self.image_y.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TangentialDerivation):
            return NotImplemented
        return self.image_x == other.image_x and self.image_y == other.image_y

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "TangentialDerivation":
        return TangentialDerivation(self.degree, -self.image_x, -self.image_y)

    def __repr__(self) -> str:
        return f"TangentialDerivation(x -> {self.image_x.pretty()}, y -> {self.image_y.pretty()})"


def nu(ftilde: Series) -> TangentialDerivation:
    """y -> [y, F], x -> -[y, F]; kills x + y."""
    _require_xy(ftilde)
    n = ftilde.homogeneous_degree()
    if n is None:
        zero = Series.zero(XY, ftilde.max_degree + 1)
        return TangentialDerivation(0, zero, zero)
    if not is_lie(ftilde):
        raise NotLieError("nu is defined on Lie elements")
    big_f = f_to_F(ftilde.with_max_degree(n + 1))
    image_y = lie_bracket(_y(n + 1), big_f)
    return TangentialDerivation(n, -image_y, image_y)


def _solvable_bracket(letter: Series, target: Series, n: int) -> bool:
    """Whether target = [letter, u] for some Lie u of degree n."""
    basis = lyndon_basis(XY, n)
    words = words_of_length(2, n + 1)
    index = {w: i for i, w in enumerate(words)}
    columns = []
    for entry in basis.entries:
        image = lie_bracket(letter, entry.expansion.with_max_degree(n + 1))
        columns.append({index[w]: c for w, c in image.terms.items()})
    rhs = [target.coeff(w) for w in words]
    return solve(QMatrix.from_columns(columns, len(words)), rhs) is not None


def is_sder(derivation: TangentialDerivation) -> bool:
    """x -> [x, u], y -> [y, v] for Lie u, v, and x + y -> 0."""
    if derivation.is_zero():
        return True
    n = derivation.degree
    top = n + 1
    image_x = derivation.image_x.with_max_degree(top)
    image_y = derivation.image_y.with_max_degree(top)
    if not (image_x + image_y).is_zero():
        return False
    return (_solvable_bracket(_x(top), image_x, n)
            and _solvable_bracket(_y(top), image_y, n))


def check_inert_equivalence(ftilde: Series) -> bool:
    """Whether [x, alpha(f~)] + [-x-y, v] = 0 has a Lie solution v."""
    _require_xy(ftilde)
    n = ftilde.homogeneous_degree()
    if n is None:
        return True
    if not is_lie(ftilde):
        raise NotLieError("the inertness condition is stated for Lie elements")
    top = n + 1
    target = -lie_bracket(_x(top), alpha(ftilde.with_max_degree(top)))
    return _solvable_bracket(-_x(top) - _y(top), target, n)


def push_invariant_image(ftilde: Series) -> bool:
    return is_push_invariant(iso_i(ftilde))


def _transport_matrix(n: int) -> List[List[Fraction]]:
    """Columns: {e0, e1}-Lyndon coordinates of i applied to each {x, y}-Lyndon element."""
    target = lyndon_basis(E01, n)
    return [target.to_coords(iso_i(entry.expansion)) for entry in lyndon_basis(XY, n).entries]


def ds_component(n: int, dmr0: Optional[Subspace] = None) -> Subspace:
    """Preimage of dmr0 in degree n under i, in {x, y}-Lyndon coordinates."""
    if n < 2:
        raise ValueError("ds is computed in degrees n >= 2")
    dmr0 = dmr0 if dmr0 is not None else dmr0_component(n)
    columns = _transport_matrix(n)
    matrix = QMatrix.from_columns([{i: c for i, c in enumerate(col) if c} for col in columns], len(columns))
    vectors = []
    for vector in dmr0.basis:
        pre = solve(matrix, vector)
        if pre is None:
            raise ValueError(f"dmr0 basis vector has no preimage in degree {n}")
        vectors.append(pre)
    return Subspace(len(columns), vectors)


def nu_rank_on_ds(n: int, ds: Optional[Subspace] = None) -> int:
    ds = ds if ds is not None else ds_component(n)
    if not ds.basis:
        return 0
    basis = lyndon_basis(XY, n)
    words = words_of_length(2, n + 1)
    rows = []
    for vector in ds.basis:
        image = nu(basis.from_coords(vector)).image_y
        rows.append([image.coeff(w) for w in words])
    return rank(QMatrix.from_rows(rows))


def ihara_bracket_xy(f: Series, g: Series) -> Series:
    """The Ihara bracket transported to {x, y} through i."""
    return iso_i_inverse(ihara_bracket(iso_i(f), iso_i(g)))


def nu_bracket_comparison(f: Series, g: Series) -> str:
    """'morphism', 'anti-morphism', 'both' (zero) or 'neither' for nu on the pair (f, g)."""
    n = f.homogeneous_degree() or 0
    m = g.homogeneous_degree() or 0
    top = n + m + 1
    f, g = f.with_max_degree(top), g.with_max_degree(top)
    left = nu(ihara_bracket_xy(f, g).with_max_degree(n + m))
    right = nu(f.with_max_degree(n)).commutator(nu(g.with_max_degree(m)))
    same = left == right
    opposite = left == -right
    if same and opposite:
        return "both"
    if same:
        return "morphism"
    if opposite:
        return "anti-morphism"
    return "neither"


def pullback_inert(n: int) -> Subspace:
    """i^-1 of the inert component in degree n, in {x, y}-Lyndon coordinates."""
    return ds_component(n, ginert_component(n))
