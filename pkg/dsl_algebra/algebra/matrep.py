"""
The 3x3 representation rho_DT of V over V ⊗ V, its commutants and the
(r,l)-twisted harmonic coproduct.

e-letters (e0, e1) sit in the left tensor factor and f-letters (f0, f1) in
the right one; f_inf = -f0 - f1.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import Poly, symbols

from dsl_algebra.algebra.harmonic import delta_w, y_word
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import BiSeries, Key
from dsl_algebra.algebra.words import E01, Word, words_of_length
from dsl_algebra.exceptions import AlphabetMismatchError, DimensionMismatchError
from dsl_algebra.linalg.exact import QMatrix, Subspace, nullspace

logger = logging.getLogger(__name__)


class BiMatrix:
    """Matrix with BiSeries entries and a uniform truncation."""

    __slots__ = ("rows", "cols", "max_degree", "entries")

    def __init__(self, entries: Sequence[Sequence[BiSeries]]):
        self.entries: List[List[BiSeries]] = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError("ragged matrix")
        degrees = {x.max_degree for r in self.entries for x in r}
        self.max_degree = min(degrees) if degrees else 0

    @classmethod
    def zero(cls, rows: int, cols: int, max_degree: int) -> "BiMatrix":
        return cls([[BiSeries.zero(max_degree) for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def identity(cls, size: int, max_degree: int) -> "BiMatrix":
        return cls([[BiSeries.scalar(1 if i == j else 0, max_degree) for j in range(size)]
                    for i in range(size)])

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, value: BiSeries) -> "BiMatrix":
        m = cls.zero(rows, cols, value.max_degree)
        m.entries[i][j] = value
        return m

    def __getitem__(self, index: Tuple[int, int]) -> BiSeries:
        i, j = index
        return self.entries[i][j]

    def _same_shape(self, other: "BiMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "BiMatrix") -> "BiMatrix":
        self._same_shape(other)
        return BiMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "BiMatrix":
        return BiMatrix([[-a for a in r] for r in self.entries])

    def __sub__(self, other: "BiMatrix") -> "BiMatrix":
        return self + (-other)

    def scale(self, c) -> "BiMatrix":
        """Multiply every entry by a scalar or, on the left, by a BiSeries."""
        if isinstance(c, BiSeries):
            return BiMatrix([[c * a for a in r] for r in self.entries])
        return BiMatrix([[a.scale(c) for a in r] for r in self.entries])

    def __mul__(self, other: "BiMatrix") -> "BiMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n = min(self.max_degree, other.max_degree)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = BiSeries.zero(n)
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return BiMatrix(out)

    def commutator(self, other: "BiMatrix") -> "BiMatrix":
        return self * other - other * self

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(x.pretty() for x in r) for r in self.entries)
        return f"BiMatrix[{self.rows}x{self.cols}]({body})"


def e(index: int, n: int) -> BiSeries:
    return BiSeries.e(index, n)


def f(index: int, n: int) -> BiSeries:
    return BiSeries.f(index, n)


def f_inf(n: int) -> BiSeries:
    return -(f(0, n) + f(1, n))


def scalar(value, n: int) -> BiSeries:
    return BiSeries.scalar(value, n)


class DTConstants(NamedTuple):
    rho0: BiMatrix
    rho1: BiMatrix
    col_dt: BiMatrix
    row_dt: BiMatrix
    C_dt: BiMatrix
    R_dt: BiMatrix


def dt_constants(n: int) -> DTConstants:
    zero = scalar(0, n)
    rho0 = BiMatrix([[e(0, n), zero, zero],
                     [e(1, n), f(0, n), -e(1, n)],
                     [zero, zero, e(0, n)]])
    col_dt = BiMatrix([[scalar(1, n)], [scalar(-1, n)], [zero]])
    row_dt = BiMatrix([[e(1, n), -f(1, n), zero]])
    C_dt = BiMatrix([[f(1, n)], [e(1, n)], [-(e(0, n) + f_inf(n))]])
    R_dt = BiMatrix([[zero, zero, scalar(1, n)]])
    return DTConstants(rho0, col_dt * row_dt, col_dt, row_dt, C_dt, R_dt)


def rho_dt(a: Series, max_degree: Optional[int] = None) -> BiMatrix:
    """Value of the algebra morphism e0 -> rho0, e1 -> rho1 on a."""
    if a.alphabet != E01:
        raise AlphabetMismatchError("rho_DT is defined on series over {e0, e1}")
    n = a.max_degree if max_degree is None else min(max_degree, a.max_degree)
    consts = dt_constants(n)
    letters = (consts.rho0, consts.rho1)
    memo: Dict[Word, BiMatrix] = {b"": BiMatrix.identity(3, n)}

    def image(word: Word) -> BiMatrix:
        if word not in memo:
            memo[word] = image(word[:-1]) * letters[word[-1]]
        return memo[word]

    total = BiMatrix.zero(3, 3, n)
    for word, c in a.items():
        if len(word) <= n:
            total = total + image(word).scale(c)
    return total


def delta_rho(n: int, max_degree: Optional[int] = None) -> BiSeries:
    """row_DT · rho0^(n-1) · col_DT."""
    if n < 1:
        raise ValueError("delta_rho is defined for n >= 1")
    top = n if max_degree is None else max_degree
    consts = dt_constants(top)
    m = consts.row_dt
    for _ in range(n - 1):
        m = m * consts.rho0
    return (m * consts.col_dt)[0, 0]


def _rotate_e1(word: Word) -> Word:
    # Ad_e1 on W: v·e1 -> e1·v
    return word[-1:] + word[:-1] if word else word


def delta_w_rl(n: int, max_degree: Optional[int] = None) -> BiSeries:
    """(Ad_e1 ⊗ Ad_e1)(Delta_W(y_n)) with the right factor written in f-letters."""
    if n < 1:
        raise ValueError("delta_w_rl is defined for n >= 1")
    top = n if max_degree is None else max_degree
    image = delta_w(Series(E01, top, {y_word(n): 1}))
    return BiSeries(top, {(_rotate_e1(l), _rotate_e1(r)): c for (l, r), c in image.terms.items()})


def bimonomials(d: int) -> List[Key]:
    """Basis keys of the degree-d part of V ⊗ V: (e-word, f-word), e-length first."""
    keys: List[Key] = []
    for k in range(d + 1):
        for ew in words_of_length(2, k):
            for fw in words_of_length(2, d - k):
                keys.append((ew, fw))
    return keys


def matrix_coordinates(m: BiMatrix, d: int) -> List[Fraction]:
    """Coordinates of the degree-d part of m over (row, col, e-word, f-word)."""
    monomials = bimonomials(d)
    coords: List[Fraction] = []
    for i in range(m.rows):
        for j in range(m.cols):
            entry = m.entries[i][j]
            coords.extend(entry.coeff(key) for key in monomials)
    return coords


def _unit_matrices(d: int, n: int, size: int = 3):
    for i in range(size):
        for j in range(size):
            for key in bimonomials(d):
                yield BiMatrix.unit(size, size, i, j, BiSeries(n, {key: 1}))


def commutant_dimension(constraints: Sequence[BiMatrix], d: int) -> Tuple[int, Subspace]:
    """{A with degree-d entries : [A, c] = 0 for every constraint c}."""
    if not constraints:
        raise ValueError("at least one constraint is needed")
    n = min(c.max_degree for c in constraints)
    columns: List[Dict[tuple, Fraction]] = []
    for unit in _unit_matrices(d, n):
        column: Dict[tuple, Fraction] = {}
        for index, c in enumerate(constraints):
            bracket = unit.commutator(c)
            for i in range(3):
                for j in range(3):
                    for key, v in bracket.entries[i][j].terms.items():
                        column[(index, i, j, len(key[0]), key[0], key[1])] = v
        columns.append(column)
    keys = sorted({k for col in columns for k in col})
    row_index = {k: r for r, k in enumerate(keys)}
    matrix = QMatrix.from_columns([{row_index[k]: v for k, v in col.items()} for col in columns], len(keys))
    space = nullspace(matrix)
    logger.debug("commutant of %d constraints in degree %d: dim %d", len(constraints), d, space.dim)
    return space.dim, space


def m_param(phi: Poly, m: BiMatrix, max_degree: int) -> BiMatrix:
    """phi(e1, f1)·I3 + [[f1, 0], [e1, 0], [0, 1]] · m · [[1, 1, 0], [0, 0, 1]]."""
    if (m.rows, m.cols) != (2, 2):
        raise DimensionMismatchError("m must be 2x2")
    n = max_degree
    phi_value: Dict[Key, Fraction] = defaultdict(Fraction)
    for (i, j), c in phi.as_dict().items():
        phi_value[(bytes([1] * i), bytes([1] * j))] += Fraction(int(c.p), int(c.q))
    zero, one = scalar(0, n), scalar(1, n)
    left = BiMatrix([[f(1, n), zero], [e(1, n), zero], [zero, one]])
    right = BiMatrix([[one, one, zero], [zero, zero, one]])
    return BiMatrix.identity(3, n).scale(BiSeries(n, phi_value)) + left * m * right


def m_param_slice(d: int) -> Subspace:
    """Degree-d part of the family M(phi, m), in commutant coordinates."""
    u, v = symbols("u v")
    n = d + 1
    vectors = []
    for i in range(d + 1):
        phi = Poly(u ** i * v ** (d - i), u, v)
        vectors.append(matrix_coordinates(m_param(phi, BiMatrix.zero(2, 2, n), n), d))
    zero_phi = Poly(0, u, v)
    # alpha, gamma sit behind a degree-1 border entry; beta, delta do not
    for (i, j), degree in (((0, 0), d - 1), ((0, 1), d - 1), ((1, 0), d), ((1, 1), d)):
        if degree < 0:
            continue
        for key in bimonomials(degree):
            unit = BiMatrix.unit(2, 2, i, j, BiSeries(n, {key: 1}))
            vectors.append(matrix_coordinates(m_param(zero_phi, unit, n), d))
    return Subspace(9 * len(bimonomials(d)), vectors)


def cv_e0_basis(d: int) -> Subspace:
    """{e0^k ⊗ f-word : k + |f-word| = d} in bimonomial coordinates."""
    monomials = bimonomials(d)
    index = {key: i for i, key in enumerate(monomials)}
    vectors = []
    for k in range(d + 1):
        for fw in words_of_length(2, d - k):
            v = [Fraction(0)] * len(monomials)
            v[index[(bytes([0] * k), fw)]] = Fraction(1)
            vectors.append(v)
    return Subspace(len(monomials), vectors)


def cv_e0_bruteforce(d: int) -> Subspace:
    """Centralizer of e0 in the degree-d part of V ⊗ V, by nullspace."""
    monomials = bimonomials(d)
    n = d + 1
    e0 = e(0, n)
    columns = []
    for key in monomials:
        x = BiSeries(n, {key: 1})
        columns.append(dict((e0 * x - x * e0).terms))
    keys = sorted({k for col in columns for k in col}, key=lambda k: (len(k[0]), k))
    row_index = {k: r for r, k in enumerate(keys)}
    return nullspace(QMatrix.from_columns([{row_index[k]: v for k, v in col.items()} for col in columns],
                                          len(keys)))


def rho_commutant_slice(d: int) -> Subspace:
    """Degree-d part of k·I3 + C_DT · C(e0) · R_DT, in commutant coordinates."""
    n = d + 1
    size = 9 * len(bimonomials(d))
    if d == 0:
        return Subspace(size, [matrix_coordinates(BiMatrix.identity(3, n), 0)])
    consts = dt_constants(n)
    monomials = bimonomials(d - 1)
    vectors = []
    for vector in cv_e0_basis(d - 1).basis:
        a = BiSeries(n, {key: c for key, c in zip(monomials, vector) if c})
        product = consts.C_dt * BiMatrix([[a]]) * consts.R_dt
        vectors.append(matrix_coordinates(product, d))
    return Subspace(size, vectors)
