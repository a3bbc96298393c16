"""
Exact rational linear algebra.

Every kernel, rank and containment question in the package ends up here.
Elimination is delegated to sympy's ``DomainMatrix`` over ``QQ``; the reduced
row echelon form it returns is unique, so bases built from it are canonical
regardless of the pivoting sympy applies internally.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from dsl_algebra.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _to_fraction(value) -> Fraction:
    rational = QQ.to_sympy(value)
    return Fraction(int(rational.p), int(rational.q))


class QMatrix:
    """Dense exact-rational matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Sequence] = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries: List[Fraction] = [ZERO] * (rows * cols)
        else:
            if len(entries) != rows * cols:
                raise DimensionMismatchError(
                    f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
                )
            self.entries = [Fraction(x) for x in entries]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, Fraction]], rows: int) -> "QMatrix":
        """Assemble a matrix from sparse columns ``{row index: value}``."""
        m = cls(rows, len(columns))
        for j, column in enumerate(columns):
            for i, value in column.items():
                if value:
                    m.entries[i * m.cols + j] = Fraction(value)
        return m

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Fraction]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def apply(self, vector: Sequence) -> List[Fraction]:
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} for {self.cols} columns")
        return [sum((a * Fraction(b) for a, b in zip(self.row(i), vector) if a), ZERO)
                for i in range(self.rows)]

    def to_domain_matrix(self) -> DomainMatrix:
        elements: Dict[int, Dict[int, object]] = {}
        for i in range(self.rows):
            row = {}
            for j, value in enumerate(self.row(i)):
                if value:
                    row[j] = QQ(value.numerator, value.denominator)
            if row:
                elements[i] = row
        return DomainMatrix(elements, (self.rows, self.cols), QQ)

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


def rref(m: QMatrix) -> Tuple[List[Dict[int, Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form as sparse rows plus the pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return [], ()
    reduced, pivots = m.to_domain_matrix().rref()
    sparse = reduced.to_sparse().rep
    rows = []
    for i in range(len(pivots)):
        row = sparse.get(i, {})
        rows.append({j: _to_fraction(v) for j, v in row.items() if v})
    return rows, tuple(pivots)


def rank(m: QMatrix) -> int:
    _, pivots = rref(m)
    return len(pivots)


class Subspace:
    """A subspace of Q^n carried by its RREF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence] = ()):
        self.ambient_dim = ambient_dim
        vectors = [tuple(Fraction(x) for x in v) for v in basis]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if vectors:
            rows, _ = rref(QMatrix.from_rows(vectors))
            self.basis: Tuple[Vector, ...] = tuple(
                tuple(row.get(j, ZERO) for j in range(ambient_dim)) for row in rows
            )
        else:
            self.basis = ()

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [[ONE if i == j else ZERO for j in range(ambient_dim)]
                                 for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, vector: Sequence) -> bool:
        return subspace_contains(Subspace(self.ambient_dim, [vector]), self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def nullspace(m: QMatrix) -> Subspace:
    """RREF basis of {v : m v = 0}."""
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for row, pivot in zip(rows, pivots):
            value = row.get(free)
            if value:
                v[pivot] = -value
        vectors.append(v)
    result = Subspace(m.cols, vectors)
    logger.debug("nullspace of %r has dimension %d", m, result.dim)
    return result


def solve(m: QMatrix, b: Sequence) -> Optional[List[Fraction]]:
    """Some x with m x = b (free variables set to zero), or None when inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {m.rows} rows")
    augmented = QMatrix(m.rows, m.cols + 1)
    for i in range(m.rows):
        for j in range(m.cols):
            augmented.entries[i * (m.cols + 1) + j] = m.entries[i * m.cols + j]
        augmented.entries[i * (m.cols + 1) + m.cols] = Fraction(b[i])
    rows, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, pivot in zip(rows, pivots):
        x[pivot] = row.get(m.cols, ZERO)
    return x


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff a is contained in b."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")
    if not a.basis:
        return True
    stacked = QMatrix.from_rows(list(b.basis) + list(a.basis))
    return rank(stacked) == b.dim


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")
    return a.basis == b.basis
