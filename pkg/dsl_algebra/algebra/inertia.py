"""
The push operator, the inert Lie algebra and the Lie-level involution.

Statements involving e_inf = -e0 - e1 are computed over the auxiliary
alphabet {e0, einf} and converted back by substitution.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional, Tuple

from dsl_algebra.algebra.lie import is_lie, is_lie_series, lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, EINF, Word, words_of_length
from dsl_algebra.exceptions import AlphabetMismatchError, ConstantTermError, NotInertError, NotLieError
from dsl_algebra.linalg.exact import QMatrix, Subspace, nullspace, rank, solve

logger = logging.getLogger(__name__)


def e_inf(max_degree: int) -> Series:
    """-e0 - e1 over {e0, e1}."""
    return Series(E01, max_degree, {bytes([0]): -1, bytes([1]): -1})


def to_einf(a: Series) -> Series:
    if a.alphabet != E01:
        raise AlphabetMismatchError("to_einf expects a series over {e0, e1}")
    n = a.max_degree
    return a.substitute({0: Series.letter(EINF, 0, n),
                         1: Series(EINF, n, {bytes([0]): -1, bytes([1]): -1})})


def from_einf(b: Series) -> Series:
    if b.alphabet != EINF:
        raise AlphabetMismatchError("from_einf expects a series over {e0, einf}")
    n = b.max_degree
    return b.substitute({0: Series.letter(E01, 0, n), 1: e_inf(n)})


def swap_zero_inf(a: Series) -> Series:
    """s_(0,inf): e1 -> e1, e0 <-> e_inf, written over {e0, e1}."""
    if a.alphabet != E01:
        raise AlphabetMismatchError("s_(0,inf) acts on series over {e0, e1}")
    n = a.max_degree
    return a.substitute({0: e_inf(n), 1: Series.letter(E01, 1, n)})


def _rotate(word: Word) -> Word:
    # blocks of einf (letter 1) separated by e0 (letter 0): a_0 e0 a_1 ... e0 a_r
    blocks: List[int] = [0]
    for letter in word:
        if letter == 0:
            blocks.append(0)
        else:
            blocks[-1] += 1
    if len(blocks) == 1:
        return word
    blocks = blocks[-1:] + blocks[:-1]
    out = bytearray()
    for i, count in enumerate(blocks):
        if i:
            out.append(0)
        out.extend(b"\x01" * count)
    return bytes(out)


def push(a: Series) -> Series:
    """Rotate the e_inf exponent vector of every word, in the {e0, einf} presentation."""
    return from_einf(to_einf(a).map_words(_rotate))


def is_push_invariant(a: Series) -> bool:
    return push(a) == a


@lru_cache(maxsize=None)
def ginert_component(n: int) -> Subspace:
    """Lie elements of degree n fixed by push, in Lyndon coordinates over {e0, e1}."""
    if n < 2:
        raise ValueError("the inert Lie algebra starts in degree 2")
    basis = lyndon_basis(E01, n)
    words = words_of_length(2, n)
    index = {w: i for i, w in enumerate(words)}
    columns = []
    for entry in basis.entries:
        defect = push(entry.expansion) - entry.expansion
        columns.append({index[w]: c for w, c in defect.terms.items()})
    space = nullspace(QMatrix.from_columns(columns, len(words)))
    logger.debug("ginert degree %d: dim %d of %d", n, space.dim, basis.dim)
    return space


def decompose_right(a: Series) -> Tuple[Series, Series]:
    """(a_inf, a_0) with a = a_inf·einf + a_0·e0."""
    if a.alphabet != EINF:
        raise AlphabetMismatchError("decompose_right expects a series over {e0, einf}")
    if a.constant_term:
        raise ConstantTermError("decompose_right needs zero constant term")
    a_inf = {w[:-1]: c for w, c in a.terms.items() if w[-1] == 1}
    a_0 = {w[:-1]: c for w, c in a.terms.items() if w[-1] == 0}
    return Series(EINF, a.max_degree, a_inf), Series(EINF, a.max_degree, a_0)


def _homogeneous_lie_degree(a: Series) -> Optional[int]:
    n = a.homogeneous_degree()
    if n is not None and not is_lie(a):
        raise NotLieError(f"not a Lie element: {a.pretty()}")
    return n


def b_of(a: Series) -> Series:
    """sum_i (-1)^i / i! · einf^i e0 d_inf^i(a_inf), read back over {e0, e1}.

    ``a_inf`` is the e_inf-ending part of ``a``; d_inf is the derivation with
    einf -> 1 and e0 -> 0.
    """
    n = _homogeneous_lie_degree(a)
    if n is None:
        return Series.zero(E01, a.max_degree)
    a_inf, _ = decompose_right(to_einf(a.with_max_degree(n)))
    rule = {0: Series.zero(EINF, n), 1: Series.one(EINF, n)}
    total = Series.zero(EINF, n)
    current = a_inf
    for i in range(n):
        if current.is_zero():
            break
        prefix = Series(EINF, n, {bytes([1] * i + [0]): Fraction((-1) ** i, factorial(i))})
        total = total + prefix * current.with_max_degree(n)
        current = current.derivation_apply(rule)
    return from_einf(total).with_max_degree(a.max_degree)


def solve_b(a: Series) -> Optional[Series]:
    """The Lie b with [a, e0] + [b, e_inf] = 0, or None."""
    n = _homogeneous_lie_degree(a)
    if n is None:
        return Series.zero(E01, a.max_degree)
    basis = lyndon_basis(E01, n)
    words = words_of_length(2, n + 1)
    index = {w: i for i, w in enumerate(words)}
    einf = e_inf(n + 1)
    columns = []
    for entry in basis.entries:
        image = lie_bracket(entry.expansion.with_max_degree(n + 1), einf)
        columns.append({index[w]: c for w, c in image.terms.items()})
    target = -lie_bracket(a.with_max_degree(n + 1), Series.letter(E01, 0, n + 1))
    x = solve(QMatrix.from_columns(columns, len(words)), [target.coeff(w) for w in words])
    if x is None:
        return None
    return basis.from_coords(x, a.max_degree)


def lie_theta(a: Series) -> Series:
    """s_(0,inf)(b_a) for push-invariant Lie a, componentwise in degree."""
    if a.alphabet != E01:
        raise AlphabetMismatchError("lie_theta acts on series over {e0, e1}")
    if not is_lie_series(a):
        raise NotLieError(f"not a Lie element: {a.pretty()}")
    if not is_push_invariant(a):
        raise NotInertError("lie_theta needs a push-invariant element")
    result = Series.zero(E01, a.max_degree)
    for d in a.degrees():
        result = result + swap_zero_inf(b_of(a.graded_component(d)))
    return result


def lie_bracket_span_rank(n: int) -> Tuple[int, int]:
    """(rank of [Lie_n, e0] + [Lie_n, e_inf], dim Lie_(n+1))."""
    basis = lyndon_basis(E01, n)
    words = words_of_length(2, n + 1)
    index = {w: i for i, w in enumerate(words)}
    e0 = Series.letter(E01, 0, n + 1)
    einf = e_inf(n + 1)
    columns = []
    for entry in basis.entries:
        p = entry.expansion.with_max_degree(n + 1)
        for other in (e0, einf):
            columns.append({index[w]: c for w, c in lie_bracket(p, other).terms.items()})
    return rank(QMatrix.from_columns(columns, len(words))), lyndon_basis(E01, n + 1).dim
