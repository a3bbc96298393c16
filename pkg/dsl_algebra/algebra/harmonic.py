"""
Harmonic coproducts and the double shuffle Lie algebra dmr0.

W is the subalgebra spanned by the empty word and the words ending in e1;
it is free on y_n = e0^(n-1) e1. The quotient M = V / V·e0 is represented
by the same W-words. Delta_W is the algebra morphism

    y_n -> y_n ⊗ 1 + 1 ⊗ y_n - sum_{n'+n''=n} y_n' ⊗ y_n''
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import Poly, QQ, Symbol

from dsl_algebra.algebra.lie import dynkin, lyndon_basis
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import Key, TensorSeries, WTensor, key_order
from dsl_algebra.algebra.words import E01, Word, words_of_length
from dsl_algebra.exceptions import AlphabetMismatchError, ConstantTermError, NotWAdmissibleError
from dsl_algebra.linalg.exact import QMatrix, Subspace, nullspace

logger = logging.getLogger(__name__)

T = Symbol("t")


def y_word(n: int) -> Word:
    return bytes([0] * (n - 1) + [1])


def is_w_admissible(word: Word) -> bool:
    return not word or word[-1] == 1


def _require_e01(a: Series) -> None:
    if a.alphabet != E01:
        raise AlphabetMismatchError("harmonic coproducts are defined over {e0, e1}")


def project_to_m(a: Series) -> Series:
    """Representative in M: drop every word ending in e0."""
    _require_e01(a)
    return Series(E01, a.max_degree, {w: c for w, c in a.terms.items() if is_w_admissible(w)})


def w_factorize(word: Word) -> Tuple[int, ...]:
    """(n1, ..., nk) with word = y_n1 ... y_nk."""
    if not word or word[-1] != 1:
        raise NotWAdmissibleError(f"{E01.format_word(word)} does not end in e1")
    parts: List[int] = []
    run = 0
    for letter in word:
        run += 1
        if letter == 1:
            parts.append(run)
            run = 0
    return tuple(parts)


@lru_cache(maxsize=None)
def _delta_y(n: int, max_degree: int) -> WTensor:
    y = y_word(n)
    terms: Dict[Key, Fraction] = defaultdict(Fraction)
    terms[(y, b"")] += 1
    terms[(b"", y)] += 1
    for left in range(1, n):
        terms[(y_word(left), y_word(n - left))] -= 1
    return WTensor(max_degree, terms)


@lru_cache(maxsize=4096)
def _delta_word(word: Word, max_degree: int) -> WTensor:
    if not word:
        return WTensor.unit(max_degree)
    parts = w_factorize(word)
    head = _delta_y(parts[0], max_degree)
    return head * _delta_word(word[parts[0]:], max_degree)


def delta_w(a: Series) -> WTensor:
    """Harmonic coproduct of an element of W."""
    _require_e01(a)
    result: Dict[Key, Fraction] = defaultdict(Fraction)
    for word, c in a.terms.items():
        if not is_w_admissible(word):
            raise NotWAdmissibleError(f"{E01.format_word(word)} is not in W")
        for key, v in _delta_word(word, a.max_degree).terms.items():
            result[key] += c * v
    return WTensor(a.max_degree, result)


def delta_m(a: Series) -> WTensor:
    """Coproduct of the class of a in M, through its W-representative."""
    return delta_w(project_to_m(a))


def primitive_defect(m: Series) -> WTensor:
    """Delta(m) - m⊗1 - 1⊗m for a W-representative m."""
    terms: Dict[Key, Fraction] = defaultdict(Fraction)
    for w, c in m.terms.items():
        terms[(w, b"")] += c
        terms[(b"", w)] += c
    return delta_m(m) - WTensor(m.max_degree, terms)


def is_m_primitive(a: Series) -> bool:
    if a.constant_term:
        raise ConstantTermError("primitivity is tested on series without constant term")
    return primitive_defect(project_to_m(a)).is_zero()


def gamma_correction(a: Series) -> Series:
    """(a | e0^(n-1) e1) · e1^n / n for homogeneous a of degree n."""
    _require_e01(a)
    n = a.homogeneous_degree()
    if n is None:
        return Series.zero(E01, a.max_degree)
    if n == 0:
        raise ConstantTermError("the correction term is defined for degrees n >= 1")
    c = a.coeff(y_word(n))
    return Series(E01, a.max_degree, {bytes([1] * n): c / n})


def dmr0_condition(a: Series) -> TensorSeries:
    """The primitivity defect of project_to_m(a) + gamma_correction(a)."""
    return primitive_defect(project_to_m(a) + gamma_correction(a))


def _assemble(columns: List[Dict], extra_rows: List[Dict[int, Fraction]]) -> QMatrix:
    keys = sorted({k for col in columns for k in col}, key=key_order)
    index = {k: i for i, k in enumerate(keys)}
    sparse = []
    for j, col in enumerate(columns):
        entry = {index[k]: v for k, v in col.items()}
        for r, row in enumerate(extra_rows):
            if row.get(j):
                entry[len(keys) + r] = row[j]
        sparse.append(entry)
    return QMatrix.from_columns(sparse, len(keys) + len(extra_rows))


def dmr0_component(n: int) -> Subspace:
    """dmr0 in degree n, in Lyndon coordinates over {e0, e1}."""
    if n < 2:
        raise ValueError("dmr0 is computed in degrees n >= 2")
    basis = lyndon_basis(E01, n)
    columns = [dict(dmr0_condition(e.expansion).terms) for e in basis.entries]
    extra = []
    if n == 2:
        extra.append({j: e.expansion.coeff(bytes([0, 1])) for j, e in enumerate(basis.entries)})
    space = nullspace(_assemble(columns, extra))
    logger.debug("dmr0 degree %d: dim %d of %d", n, space.dim, basis.dim)
    return space


def dmr0_component_oracle(n: int) -> Subspace:
    """dmr0 in degree n computed on the full word space, then read in Lyndon coordinates."""
    if n < 2:
        raise ValueError("dmr0 is computed in degrees n >= 2")
    words = words_of_length(2, n)
    columns = []
    for w in words:
        unit = Series(E01, n, {w: 1})
        # Lie rows: dynkin(a) = n·a; primitivity rows: the corrected class is primitive
        col = {("lie", k): v for k, v in (dynkin(unit) - unit.scale(n)).terms.items()}
        col.update({("prim",) + k: v for k, v in dmr0_condition(unit).terms.items()})
        if n == 2 and w == bytes([0, 1]):
            col[("coeff",)] = Fraction(1)
        columns.append(col)
    keys = sorted({k for col in columns for k in col}, key=_oracle_key)
    index = {k: i for i, k in enumerate(keys)}
    sparse = [{index[k]: v for k, v in col.items()} for col in columns]
    word_space = nullspace(QMatrix.from_columns(sparse, len(keys)))
    basis = lyndon_basis(E01, n)
    elements = [Series(E01, n, dict(zip(words, v))) for v in word_space.basis]
    return basis.span(elements)


def _oracle_key(key: tuple) -> tuple:
    tag, rest = key[0], key[1:]
    order = {"lie": 0, "prim": 1, "coeff": 2}[tag]
    if tag == "lie":
        return (order, len(rest[0]), rest[0])
    return (order,) + key_order(rest)


def _power_series_exp(coeffs: List[Fraction], n: int) -> List[Fraction]:
    """exp of a power series with zero constant term, via E' = S'E."""
    result = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        result[k] = sum((j * coeffs[j] * result[k - j] for j in range(1, k + 1)), Fraction(0)) / k
    return result


def _power_series_inverse(coeffs: List[Fraction], n: int) -> List[Fraction]:
    result = [Fraction(0)] * (n + 1)
    result[0] = 1 / coeffs[0]
    for k in range(1, n + 1):
        result[k] = -sum((coeffs[j] * result[k - j] for j in range(1, k + 1)), Fraction(0)) / coeffs[0]
    return result


def _to_poly(coeffs: List[Fraction]) -> Poly:
    return Poly.from_list([QQ(c.numerator, c.denominator) for c in reversed(coeffs)], T, domain=QQ)


def _gamma_coefficients(g: Series, n: int) -> List[Fraction]:
    _require_e01(g)
    if g.constant_term != 1:
        raise ConstantTermError("Gamma needs a series with constant term 1")
    if g.coeff(bytes([1])):
        raise ValueError("Gamma needs (g | e1) = 0")
    n = min(n, g.max_degree)
    exponent = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) * g.coeff(y_word(k)) for k in range(1, n + 1)]
    return _power_series_exp(exponent, n)


def gamma_series(g: Series, n: int) -> Poly:
    """Gamma_g(t) = exp(sum_k (-1)^(k+1)/k (g | e0^(k-1) e1) t^k), truncated at t^n."""
    return _to_poly(_gamma_coefficients(g, n))


def sigma_series(g: Series, n: int) -> Poly:
    """sigma(g)(t) = Gamma_g(-t)^(-1), truncated at t^n."""
    coeffs = _gamma_coefficients(g, n)
    flipped = [c * (-1) ** k for k, c in enumerate(coeffs)]
    return _to_poly(_power_series_inverse(flipped, len(coeffs) - 1))


def truncate_poly(p: Poly, n: int) -> Poly:
    terms = {(k,): v for (k,), v in p.as_dict().items() if k <= n}
    return Poly.from_dict(terms, T, domain=QQ) if terms else Poly(0, T, domain=QQ)
