"""Seeded random elements for property checks. No particular distribution."""
import random
from fractions import Fraction
from typing import Dict, Optional, Sequence

from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.words import Alphabet, Word, words_of_length
from dsl_algebra.linalg.exact import Subspace


def random_rational(rng: random.Random, spread: int = 3) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, spread))


def random_nonzero_rational(rng: random.Random, spread: int = 3) -> Fraction:
    value = Fraction(0)
    while not value:
        value = random_rational(rng, spread)
    return value


def random_lie_element(alphabet: Alphabet, degree: int, rng: random.Random,
                       max_degree: Optional[int] = None) -> Series:
    """Random homogeneous Lie element: a random combination of Lyndon expansions."""
    basis = lyndon_basis(alphabet, degree)
    coords = [random_rational(rng) for _ in range(basis.dim)]
    return basis.from_coords(coords, max_degree if max_degree is not None else degree)


def random_lie_series(alphabet: Alphabet, degrees: Sequence[int], rng: random.Random,
                      max_degree: int) -> Series:
    total = Series.zero(alphabet, max_degree)
    for d in degrees:
        if d <= max_degree:
            total = total + random_lie_element(alphabet, d, rng, max_degree)
    return total


def random_subspace_element(subspace: Subspace, rng: random.Random) -> list:
    coords = [Fraction(0)] * subspace.ambient_dim
    for vector in subspace.basis:
        c = random_rational(rng)
        coords = [x + c * v for x, v in zip(coords, vector)]
    return coords


def random_series(alphabet: Alphabet, max_degree: int, rng: random.Random,
                  density: float = 0.5, min_degree: int = 0) -> Series:
    terms: Dict[Word, Fraction] = {}
    for n in range(min_degree, max_degree + 1):
        for w in words_of_length(alphabet.size, n):
            if rng.random() < density:
                terms[w] = random_rational(rng)
    return Series(alphabet, max_degree, terms)


def random_w_element(max_degree: int, rng: random.Random, alphabet: Alphabet,
                     density: float = 0.4) -> Series:
    """Random element of W: constant plus words ending in the second letter."""
    terms: Dict[Word, Fraction] = {b"": random_rational(rng)}
    for n in range(1, max_degree + 1):
        for w in words_of_length(alphabet.size, n):
            if w[-1] == 1 and rng.random() < density:
                terms[w] = random_rational(rng)
    return Series(alphabet, max_degree, terms)
