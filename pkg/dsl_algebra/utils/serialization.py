"""JSON forms of rationals, series, tensors and subspaces.

Rationals travel as "p/q" strings (integers as "p"), never as floats.
"""
import json
import re
from fractions import Fraction
from typing import Any, Dict, Sequence

from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import TensorSeries
from dsl_algebra.algebra.words import KNOWN_ALPHABETS, Alphabet, word_from_str, word_to_str
from dsl_algebra.exceptions import AlgebraError, InputFormatError
from dsl_algebra.linalg.exact import Subspace
from dsl_algebra.models.records import SubspaceRecord

RATIONAL_PATTERN = re.compile(r"-?[0-9]+(/[0-9]+)?")


def rational_to_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: Any) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise InputFormatError(f"expected an exact rational string, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not RATIONAL_PATTERN.fullmatch(text):
        raise InputFormatError(f"bad rational {text!r}: expected p or p/q")
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        raise InputFormatError(f"bad rational {text!r}: {e}") from None


def alphabet_from_letters(letters: Sequence[str]) -> Alphabet:
    key = tuple(letters)
    if key in KNOWN_ALPHABETS:
        return KNOWN_ALPHABETS[key]
    try:
        return Alphabet(*key)
    except AlgebraError as e:
        raise InputFormatError(str(e)) from None


def series_to_dict(a: Series) -> Dict[str, Any]:
    return {
        "alphabet": list(a.alphabet.letters),
        "max_degree": a.max_degree,
        "terms": {word_to_str(w): rational_to_str(c) for w, c in a.items()},
    }


def series_from_dict(data: Any) -> Series:
    if not isinstance(data, dict):
        raise InputFormatError("a series is a JSON object")
    missing = {"alphabet", "max_degree", "terms"} - set(data)
    if missing:
        raise InputFormatError(f"series JSON lacks {sorted(missing)}")
    alphabet = alphabet_from_letters(data["alphabet"])
    max_degree = data["max_degree"]
    if isinstance(max_degree, bool) or not isinstance(max_degree, int) or max_degree < 0:
        raise InputFormatError(f"bad max_degree {max_degree!r}")
    if not isinstance(data["terms"], dict):
        raise InputFormatError("series terms must be an object")
    terms = {}
    for key, value in data["terms"].items():
        if not isinstance(key, str) or not all(c in "0123456789" for c in key):
            raise InputFormatError(f"bad word {key!r}")
        word = word_from_str(key)
        if any(i >= alphabet.size for i in word):
            raise InputFormatError(f"word {key!r} outside {alphabet}")
        if len(word) > max_degree:
            raise InputFormatError(f"word {key!r} beyond max_degree {max_degree}")
        terms[word] = rational_from_str(value)
    return Series(alphabet, max_degree, terms)


def tensor_to_dict(t: TensorSeries) -> Dict[str, Any]:
    return {
        "arity": t.arity,
        "max_degree": t.max_degree,
        "terms": {"|".join(word_to_str(w) for w in key): rational_to_str(c) for key, c in t.items()},
    }


def subspace_to_record(s: Subspace) -> SubspaceRecord:
    return SubspaceRecord(ambient_dim=s.ambient_dim,
                          basis=[[rational_to_str(x) for x in v] for v in s.basis])


def subspace_from_record(record: SubspaceRecord) -> Subspace:
    return Subspace(record.ambient_dim, [[rational_from_str(x) for x in v] for v in record.basis])


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, UTF-8 characters kept, newline-terminated."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"malformed JSON: {e}") from None
