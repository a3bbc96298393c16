"""
Free Lie algebra structure: Lyndon bases, Lie recognition and brackets.

The Lyndon basis of degree n bracket-expands each Lyndon word along its
standard factorization (longest proper Lyndon suffix). Its expansion is the
word itself plus lexicographically larger words of the same length, which
makes the coordinate solve triangular.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01, Alphabet, Word
from dsl_algebra.exceptions import AlphabetMismatchError, NotHomogeneousError, NotLieError
from dsl_algebra.linalg.exact import Subspace

logger = logging.getLogger(__name__)


def is_lyndon(word: Word) -> bool:
    """Strictly smaller than each of its proper rotations."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


@lru_cache(maxsize=None)
def lyndon_words(size: int, n: int) -> Tuple[Word, ...]:
    """Lyndon words of length exactly n, lexicographically (Duval's generator)."""
    result: List[Word] = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == n:
            result.append(bytes(w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == size - 1:
            w.pop()
    return tuple(result)


def standard_factorization(word: Word) -> Tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as u·v with v its longest proper Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f"{word!r} has no standard factorization")


def bracketing(word: Word, alphabet: Alphabet) -> str:
    if len(word) == 1:
        return alphabet.letters[word[0]]
    u, v = standard_factorization(word)
    return f"[{bracketing(u, alphabet)},{bracketing(v, alphabet)}]"


def _expand(word: Word, alphabet: Alphabet, max_degree: int) -> Series:
    if len(word) == 1:
        return Series(alphabet, max_degree, {word: 1})
    u, v = standard_factorization(word)
    return lie_bracket(_expand(u, alphabet, max_degree), _expand(v, alphabet, max_degree))


class LyndonEntry(NamedTuple):
    word: Word
    bracket: str
    expansion: Series


class LyndonBasis:
    """Lyndon basis of the degree-n component of the free Lie algebra."""

    def __init__(self, alphabet: Alphabet, degree: int):
        if degree < 1:
            raise ValueError("Lyndon bases start in degree 1")
        self.alphabet = alphabet
        self.degree = degree
        self.entries: Tuple[LyndonEntry, ...] = tuple(
            LyndonEntry(w, bracketing(w, alphabet), _expand(w, alphabet, degree))
            for w in lyndon_words(alphabet.size, degree)
        )
        self.words: Tuple[Word, ...] = tuple(e.word for e in self.entries)
        # coefficient of the j-th Lyndon word in the i-th expansion
        self._pairing = [[e.expansion.coeff(w) for w in self.words] for e in self.entries]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"LyndonBasis({self.alphabet}, degree={self.degree}, dim={self.dim})"

    def to_coords(self, a: Series) -> List[Fraction]:
        if a.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"{a.alphabet} vs {self.alphabet}")
        degree = a.homogeneous_degree()
        if degree is None:
            return [Fraction(0)] * self.dim
        if degree != self.degree:
            raise NotHomogeneousError(f"degree {degree} element for the degree {self.degree} basis")
        coords: List[Fraction] = []
        for j, word in enumerate(self.words):
            value = a.coeff(word) - sum((coords[i] * self._pairing[i][j] for i in range(j)), Fraction(0))
            coords.append(value)
        if self.from_coords(coords) != a.with_max_degree(self.degree):
            raise NotLieError(f"degree {degree} series is not in the Lie span")
        return coords

    def from_coords(self, coords: Sequence, max_degree: Optional[int] = None) -> Series:
        n = self.degree if max_degree is None else max_degree
        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for c, entry in zip(coords, self.entries):
            c = Fraction(c)
            if c:
                for w, v in entry.expansion.terms.items():
                    acc[w] += c * v
        return Series(self.alphabet, n, acc).with_max_degree(n)

    def elements(self, subspace: Subspace, max_degree: Optional[int] = None) -> List[Series]:
        """Word expansions of the basis vectors of a subspace in Lyndon coordinates."""
        if subspace.ambient_dim != self.dim:
            raise ValueError(f"subspace of ambient dimension {subspace.ambient_dim} for a basis of size {self.dim}")
        return [self.from_coords(v, max_degree) for v in subspace.basis]

    def span(self, elements: Sequence[Series]) -> Subspace:
        return Subspace(self.dim, [self.to_coords(e) for e in elements])


@lru_cache(maxsize=None)
def lyndon_basis(alphabet: Alphabet, n: int) -> LyndonBasis:
    basis = LyndonBasis(alphabet, n)
    logger.debug("built %r", basis)
    return basis


def witt_number(size: int, n: int) -> int:
    """Dimension of the degree-n free Lie component on ``size`` generators."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * size ** (n // d)
    return total // n


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def _left_normed(word: Word) -> Tuple[Tuple[Word, int], ...]:
    """Word expansion of [[...[w1,w2],...],wn]."""
    if len(word) <= 1:
        return ((word, 1),)
    acc: Dict[Word, int] = defaultdict(int)
    letter = word[-1:]
    for w, c in _left_normed(word[:-1]):
        acc[w + letter] += c
        acc[letter + w] -= c
    return tuple((w, c) for w, c in acc.items() if c)


def dynkin(a: Series) -> Series:
    """Linear extension of the left-normed bracketing map."""
    acc: Dict[Word, Fraction] = defaultdict(Fraction)
    for word, c in a.terms.items():
        for w, k in _left_normed(word):
            acc[w] += c * k
    return Series(a.alphabet, a.max_degree, acc)


def is_lie(a: Series) -> bool:
    """Dynkin–Specht–Wever test on a homogeneous series."""
    degree = a.homogeneous_degree()
    if degree is None:
        return True
    if degree == 0:
        return False
    return dynkin(a) == a.scale(degree)


def is_lie_series(a: Series) -> bool:
    """Componentwise Lie test for a series with no constant term."""
    if a.constant_term:
        return False
    return all(is_lie(a.graded_component(d)) for d in a.degrees())


def _require_lie(a: Series) -> None:
    if not is_lie_series(a):
        raise NotLieError(f"not a Lie element: {a.pretty()}")


def ihara_derivation(a: Series) -> Dict[int, Series]:
    """Rule of d_a: e0 -> 0, e1 -> [e1, a]."""
    e1 = Series.letter(E01, 1, a.max_degree)
    return {0: Series.zero(E01, a.max_degree), 1: lie_bracket(e1, a)}


def ihara_bracket(a: Series, b: Series) -> Series:
    """⟨a,b⟩ = [a,b] + d_a(b) - d_b(a) on Lie series over {e0, e1}."""
    if a.alphabet != E01 or b.alphabet != E01:
        raise AlphabetMismatchError("the Ihara bracket is defined over {e0, e1}")
    _require_lie(a)
    _require_lie(b)
    return (lie_bracket(a, b)
            + b.derivation_apply(ihara_derivation(a))
            - a.derivation_apply(ihara_derivation(b)))
