"""
Tensor powers of truncated series.

``TensorSeries`` keys are tuples of words, one per tensor factor, and the
truncation bounds the total degree. Multiplication concatenates factor by
factor, so letters in different factors commute structurally.
"""
from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from dsl_algebra.algebra.words import E01, F01, Alphabet, Word
from dsl_algebra.exceptions import AlphabetMismatchError, NotWAdmissibleError

Key = Tuple[Word, ...]
Scalar = Union[int, Fraction]


def key_order(key: Key) -> tuple:
    return tuple(x for w in key for x in (len(w), w))


class TensorSeries:
    __slots__ = ("alphabets", "max_degree", "_terms")

    def __init__(self, alphabets: Tuple[Alphabet, ...], max_degree: int,
                 terms: Optional[Mapping[Key, Scalar]] = None):
        self.alphabets = tuple(alphabets)
        self.max_degree = max_degree
        cleaned: Dict[Key, Fraction] = defaultdict(Fraction)
        for key, coeff in (terms or {}).items():
            key = tuple(bytes(w) for w in key)
            if len(key) != len(self.alphabets):
                raise AlphabetMismatchError(f"key {key} has wrong arity for {len(self.alphabets)} factors")
            if sum(len(w) for w in key) <= max_degree:
                cleaned[key] += Fraction(coeff)
        self._validate(cleaned)
        self._terms = {k: c for k, c in cleaned.items() if c}

    def _validate(self, terms: Mapping[Key, Fraction]) -> None:
        pass

    def _new(self, max_degree: int, terms: Mapping[Key, Fraction]) -> "TensorSeries":
        obj = object.__new__(type(self))
        obj.alphabets = self.alphabets
        obj.max_degree = max_degree
        obj._terms = {k: c for k, c in terms.items() if c}
        return obj

    @property
    def arity(self) -> int:
        return len(self.alphabets)

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: key_order(t[0])))

    def coeff(self, key: Key) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "TensorSeries") -> None:
        if not isinstance(other, TensorSeries) or other.alphabets != self.alphabets:
            raise AlphabetMismatchError("tensor factors differ")

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        self._check(other)
        n = min(self.max_degree, other.max_degree)
        acc: Dict[Key, Fraction] = defaultdict(Fraction)
        for src in (self._terms, other._terms):
            for k, c in src.items():
                if sum(len(w) for w in k) <= n:
                    acc[k] += c
        return self._new(n, acc)

    def __neg__(self) -> "TensorSeries":
        return self._new(self.max_degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        return self + (-other)

    def scale(self, c: Scalar) -> "TensorSeries":
        c = Fraction(c)
        return self._new(self.max_degree, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other) -> "TensorSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        n = min(self.max_degree, other.max_degree)
        acc: Dict[Key, Fraction] = defaultdict(Fraction)
        for k1, c1 in self._terms.items():
            d1 = sum(len(w) for w in k1)
            for k2, c2 in other._terms.items():
                if d1 + sum(len(w) for w in k2) > n:
                    continue
                acc[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
        return self._new(n, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSeries):
            return NotImplemented
        if self.alphabets != other.alphabets:
            return False
        n = min(self.max_degree, other.max_degree)
        mine = {k: c for k, c in self._terms.items() if sum(len(w) for w in k) <= n}
        theirs = {k: c for k, c in other._terms.items() if sum(len(w) for w in k) <= n}
        return mine == theirs

    __hash__ = None  # type: ignore[assignment]

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.items():
            factors = "⊗".join(a.format_word(w) for a, w in zip(self.alphabets, key))
            parts.append(factors if c == 1 else f"{c}*{factors}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}[N={self.max_degree}]({self.pretty()})"


class WTensor(TensorSeries):
    """Element of the tensor square of W: both factors empty or ending in e1."""

    def __init__(self, max_degree: int, terms: Optional[Mapping[Key, Scalar]] = None):
        super().__init__((E01, E01), max_degree, terms)

    def _validate(self, terms: Mapping[Key, Fraction]) -> None:
        for key in terms:
            if any(w and w[-1] != 1 for w in key):
                raise NotWAdmissibleError(f"tensor factor ending in e0: {key}")

    @classmethod
    def unit(cls, max_degree: int) -> "WTensor":
        return cls(max_degree, {(b"", b""): 1})


class BiSeries(TensorSeries):
    """Element of V ⊗ V written with e-letters on the left and f-letters on the right."""

    def __init__(self, max_degree: int, terms: Optional[Mapping[Key, Scalar]] = None):
        super().__init__((E01, F01), max_degree, terms)

    @classmethod
    def scalar(cls, value: Scalar, max_degree: int) -> "BiSeries":
        return cls(max_degree, {(b"", b""): value})

    @classmethod
    def e(cls, index: int, max_degree: int) -> "BiSeries":
        return cls(max_degree, {(bytes([index]), b""): 1})

    @classmethod
    def f(cls, index: int, max_degree: int) -> "BiSeries":
        return cls(max_degree, {(b"", bytes([index])): 1})

    @classmethod
    def zero(cls, max_degree: int) -> "BiSeries":
        return cls(max_degree)

    def graded_component(self, d: int) -> "BiSeries":
        return self._new(self.max_degree, {k: c for k, c in self._terms.items()
                                           if len(k[0]) + len(k[1]) == d})
