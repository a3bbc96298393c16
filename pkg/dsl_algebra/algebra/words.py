"""Alphabets and words.

A word is a ``bytes`` object whose entries are letter indices into its
alphabet; the empty word is ``b""``. Canonical order is length first, then
lexicographic in letter order.
"""
from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple, Union

from dsl_algebra.exceptions import AlphabetMismatchError

Word = bytes
LetterRef = Union[int, str]


class Alphabet:
    """Ordered, distinct letter names. Two alphabets are equal iff their names are."""

    __slots__ = ("letters",)

    def __init__(self, *letters: str):
        if not letters:
            raise AlphabetMismatchError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise AlphabetMismatchError(f"repeated letters in {letters}")
        self.letters: Tuple[str, ...] = tuple(letters)

    @property
    def size(self) -> int:
        return len(self.letters)

    def index(self, letter: LetterRef) -> int:
        if isinstance(letter, int):
            if not 0 <= letter < self.size:
                raise AlphabetMismatchError(f"letter index {letter} outside {self}")
            return letter
        try:
            return self.letters.index(letter)
        except ValueError:
            raise AlphabetMismatchError(f"letter {letter!r} not in {self}") from None

    def word(self, *letters: LetterRef) -> Word:
        return bytes(self.index(x) for x in letters)

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        return "".join(self.letters[i] for i in word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({', '.join(self.letters)})"


E01 = Alphabet("e0", "e1")
EINF = Alphabet("e0", "einf")
F01 = Alphabet("f0", "f1")
XY = Alphabet("x", "y")

KNOWN_ALPHABETS = {a.letters: a for a in (E01, EINF, F01, XY)}


def word_key(word: Word) -> Tuple[int, Word]:
    """Sort key for the canonical length-then-lexicographic order."""
    return (len(word), word)


@lru_cache(maxsize=None)
def words_of_length(size: int, n: int) -> Tuple[Word, ...]:
    """All words of length n over ``size`` letters, lexicographically."""
    return tuple(bytes(w) for w in product(range(size), repeat=n))


def words_up_to(size: int, n: int) -> List[Word]:
    result: List[Word] = []
    for k in range(n + 1):
        result.extend(words_of_length(size, k))
    return result


def word_to_str(word: Word) -> str:
    return "".join(str(i) for i in word)


def word_from_str(text: str) -> Word:
    return bytes(int(c) for c in text)


def check_word(word: Sequence[int], alphabet: Alphabet) -> Word:
    for i in word:
        if not 0 <= i < alphabet.size:
            raise AlphabetMismatchError(f"letter index {i} outside {alphabet}")
    return bytes(word)
