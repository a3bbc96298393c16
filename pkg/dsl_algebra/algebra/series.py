"""
Degree-truncated noncommutative power series with exact rational coefficients.

A ``Series`` records its own truncation order. Combining two series yields
the smaller order, so coefficients above it are never reported.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from dsl_algebra.algebra.words import Alphabet, LetterRef, Word, check_word, word_key
from dsl_algebra.exceptions import (
    AlphabetMismatchError,
    ConstantTermError,
    NotHomogeneousError,
    TruncationError,
)

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class Series:
    """Map Word -> Fraction over a fixed alphabet, truncated at ``max_degree``."""

    __slots__ = ("alphabet", "max_degree", "_terms")

    def __init__(self, alphabet: Alphabet, max_degree: int, terms: Optional[Mapping] = None,
                 _trusted: bool = False):
        if max_degree < 0:
            raise TruncationError(f"negative truncation order {max_degree}")
        self.alphabet = alphabet
        self.max_degree = max_degree
        if _trusted:
            self._terms: Dict[Word, Fraction] = terms  # type: ignore[assignment]
            return
        cleaned: Dict[Word, Fraction] = {}
        for word, coeff in (terms or {}).items():
            word = check_word(word, alphabet)
            if len(word) > max_degree:
                continue
            coeff = Fraction(coeff)
            if coeff:
                cleaned[word] = cleaned.get(word, Fraction(0)) + coeff
        self._terms = {w: c for w, c in cleaned.items() if c}

    # construction

    @classmethod
    def zero(cls, alphabet: Alphabet, max_degree: int) -> "Series":
        return cls(alphabet, max_degree, {}, _trusted=True)

    @classmethod
    def one(cls, alphabet: Alphabet, max_degree: int) -> "Series":
        return cls.scalar(1, alphabet, max_degree)

    @classmethod
    def scalar(cls, value: Scalar, alphabet: Alphabet, max_degree: int) -> "Series":
        return cls(alphabet, max_degree, {b"": value})

    @classmethod
    def letter(cls, alphabet: Alphabet, letter: LetterRef, max_degree: int) -> "Series":
        return cls(alphabet, max_degree, {bytes([alphabet.index(letter)]): 1})

    @classmethod
    def monomial(cls, alphabet: Alphabet, word: Iterable[LetterRef], max_degree: int,
                 coeff: Scalar = 1) -> "Series":
        return cls(alphabet, max_degree, {alphabet.word(*word): coeff})

    @classmethod
    def _build(cls, alphabet: Alphabet, max_degree: int, acc: Mapping[Word, Fraction]) -> "Series":
        return cls(alphabet, max_degree, {w: c for w, c in acc.items() if c}, _trusted=True)

    # inspection

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: word_key(t[0])))

    def coeff(self, word: Union[Word, Iterable[LetterRef]]) -> Fraction:
        word = word if isinstance(word, bytes) else self.alphabet.word(*word)
        if len(word) > self.max_degree:
            raise TruncationError(f"word of length {len(word)} beyond truncation {self.max_degree}")
        return self._terms.get(word, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(b"", Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({len(w) for w in self._terms}))

    def homogeneous_degree(self) -> Optional[int]:
        """Degree of a homogeneous series, None for zero; raises otherwise."""
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise NotHomogeneousError(f"series has components in degrees {degrees}")
        return degrees[0]

    def lowest_degree(self) -> Optional[int]:
        degrees = self.degrees()
        return degrees[0] if degrees else None

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet} vs {other.alphabet}")

    # truncation

    def truncate(self, d: int) -> "Series":
        if d > self.max_degree:
            raise TruncationError(f"cannot truncate order {self.max_degree} series at {d}")
        return Series._build(self.alphabet, d, {w: c for w, c in self._terms.items() if len(w) <= d})

    def graded_component(self, d: int) -> "Series":
        if d > self.max_degree:
            raise TruncationError(f"degree {d} beyond truncation {self.max_degree}")
        return Series._build(self.alphabet, self.max_degree,
                             {w: c for w, c in self._terms.items() if len(w) == d})

    def with_max_degree(self, n: int) -> "Series":
        """Retag the truncation order.

        Lowering truncates. Raising treats the stored terms as an exact
        polynomial, which the caller must know to be the case.
        """
        if n <= self.max_degree:
            return self.truncate(n)
        return Series._build(self.alphabet, n, self._terms)

    # ring structure

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        n = min(self.max_degree, other.max_degree)
        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for src in (self._terms, other._terms):
            for w, c in src.items():
                if len(w) <= n:
                    acc[w] += c
        return Series._build(self.alphabet, n, acc)

    def __neg__(self) -> "Series":
        return Series._build(self.alphabet, self.max_degree, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, c: Scalar) -> "Series":
        c = Fraction(c)
        if not c:
            return Series.zero(self.alphabet, self.max_degree)
        return Series._build(self.alphabet, self.max_degree, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        n = min(self.max_degree, other.max_degree)
        by_length: Dict[int, list] = defaultdict(list)
        for w, c in other._terms.items():
            by_length[len(w)].append((w, c))
        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for w1, c1 in self._terms.items():
            room = n - len(w1)
            if room < 0:
                continue
            for length, bucket in by_length.items():
                if length > room:
                    continue
                for w2, c2 in bucket:
                    acc[w1 + w2] += c1 * c2
        return Series._build(self.alphabet, n, acc)

    def __rmul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Series":
        result = Series.one(self.alphabet, self.max_degree)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        """Equal alphabets and equal coefficients up to the smaller truncation."""
        if not isinstance(other, Series):
            return NotImplemented
        if self.alphabet != other.alphabet:
            return False
        n = min(self.max_degree, other.max_degree)
        mine = {w: c for w, c in self._terms.items() if len(w) <= n}
        theirs = {w: c for w, c in other._terms.items() if len(w) <= n}
        return mine == theirs

    __hash__ = None  # type: ignore[assignment]

    # transcendental maps

    def exp(self) -> "Series":
        if self.constant_term:
            raise ConstantTermError("exp needs a series with zero constant term")
        result = Series.one(self.alphabet, self.max_degree)
        power = Series.one(self.alphabet, self.max_degree)
        for k in range(1, self.max_degree + 1):
            power = (power * self).scale(Fraction(1, k))
            if power.is_zero():
                break
            result = result + power
        return result

    def log(self) -> "Series":
        if self.constant_term != 1:
            raise ConstantTermError("log needs a series with constant term 1")
        x = self - Series.one(self.alphabet, self.max_degree)
        result = Series.zero(self.alphabet, self.max_degree)
        power = Series.one(self.alphabet, self.max_degree)
        for k in range(1, self.max_degree + 1):
            power = power * x
            if power.is_zero():
                break
            result = result + power.scale(Fraction((-1) ** (k + 1), k))
        return result

    def inverse(self) -> "Series":
        c = self.constant_term
        if not c:
            raise ConstantTermError("inverse needs a nonzero constant term")
        x = Series.one(self.alphabet, self.max_degree) - self.scale(1 / c)
        result = Series.one(self.alphabet, self.max_degree)
        power = Series.one(self.alphabet, self.max_degree)
        for _ in range(self.max_degree):
            power = power * x
            if power.is_zero():
                break
            result = result + power
        return result.scale(1 / c)

    def conjugate(self, a: "Series") -> "Series":
        """Ad_self(a) = self · a · self⁻¹."""
        return self * a * self.inverse()

    # morphisms

    def substitute(self, images: Mapping[LetterRef, "Series"],
                   target: Optional[Alphabet] = None) -> "Series":
        """Apply the algebra morphism sending each letter to its image.

        Letters without an image are not allowed; every image must have zero
        constant term so that the truncation stays meaningful.
        """
        resolved: Dict[int, Series] = {self.alphabet.index(k): v for k, v in images.items()}
        if set(resolved) != set(range(self.alphabet.size)):
            raise AlphabetMismatchError(f"substitution must give an image for every letter of {self.alphabet}")
        alphabets = {v.alphabet for v in resolved.values()}
        if target is not None:
            alphabets.add(target)
        if len(alphabets) != 1:
            raise AlphabetMismatchError("substitution images live over different alphabets")
        target = alphabets.pop()
        for v in resolved.values():
            if v.constant_term:
                raise ConstantTermError("substitution images must have zero constant term")
        n = min([self.max_degree] + [v.max_degree for v in resolved.values()])
        memo: Dict[Word, Series] = {b"": Series.one(target, n)}

        def image_of(word: Word) -> Series:
            if word not in memo:
                memo[word] = image_of(word[:-1]) * resolved[word[-1]]
            return memo[word]

        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for word, c in sorted(self._terms.items(), key=lambda t: word_key(t[0])):
            if len(word) > n:
                continue
            for w, v in image_of(word)._terms.items():
                acc[w] += c * v
        return Series._build(target, n, acc)

    def derivation_apply(self, rule: Mapping[LetterRef, "Series"]) -> "Series":
        """Apply the derivation extending ``rule`` (letters without a rule map to 0)."""
        resolved: Dict[int, Series] = {}
        for k, v in rule.items():
            self._check(v)
            resolved[self.alphabet.index(k)] = v
        n = min([self.max_degree] + [v.max_degree for v in resolved.values()])
        if any(v.constant_term for v in resolved.values()):
            n = max(n - 1, 0)
        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for word, c in self._terms.items():
            for i, letter in enumerate(word):
                image = resolved.get(letter)
                if image is None:
                    continue
                prefix, suffix = word[:i], word[i + 1:]
                for w, v in image._terms.items():
                    full = prefix + w + suffix
                    if len(full) <= n:
                        acc[full] += c * v
        return Series._build(self.alphabet, n, acc)

    def map_words(self, fn: Callable[[Word], Word]) -> "Series":
        """Linear extension of a word-to-word map that preserves length."""
        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for w, c in self._terms.items():
            acc[fn(w)] += c
        return Series._build(self.alphabet, self.max_degree, acc)

    # display

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            parts.append(f"{c}*{self.alphabet.format_word(w)}" if c != 1 else self.alphabet.format_word(w))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Series[{','.join(self.alphabet.letters)};N={self.max_degree}]({self.pretty()})"


def lie_bracket(a: Series, b: Series) -> Series:
    """[a, b] = ab - ba."""
    return a * b - b * a


def sum_series(items: Iterable[Series], alphabet: Alphabet, max_degree: int) -> Series:
    total = Series.zero(alphabet, max_degree)
    for item in items:
        total = total + item
    return total
