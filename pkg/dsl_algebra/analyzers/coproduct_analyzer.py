"""Coassoc suite: the harmonic coproduct and the two routes to dmr0."""
import logging
import random
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Optional

from dsl_algebra.algebra.harmonic import delta_w, dmr0_component_oracle, is_w_admissible
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import Key, TensorSeries, WTensor
from dsl_algebra.algebra.words import E01, words_of_length
from dsl_algebra.analyzers.component_analyzer import component
from dsl_algebra.analyzers.push_analyzer import DMR0_DIMS
from dsl_algebra.linalg.exact import subspace_equal
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.sampling import random_w_element

logger = logging.getLogger(__name__)


def _cube(t: WTensor, side: int) -> TensorSeries:
    """(Delta ⊗ id)(t) for side 0, (id ⊗ Delta)(t) for side 1."""
    terms: Dict[Key, Fraction] = defaultdict(Fraction)
    for key, c in t.terms.items():
        image = delta_w(Series(E01, t.max_degree, {key[side]: 1}))
        for (l, r), v in image.terms.items():
            new = (l, r, key[1]) if side == 0 else (key[0], l, r)
            terms[new] += c * v
    return TensorSeries((E01, E01, E01), t.max_degree, terms)


def coproduct_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="coassoc", max_degree=max_degree, seed=settings.seed)
    top = min(max_degree, 6)

    e1 = Series.letter(E01, 1, 1)
    expected = WTensor(1, {(bytes([1]), b""): 1, (b"", bytes([1])): 1})
    report.add("Δ(e1) = e1⊗1 + 1⊗e1", delta_w(e1) == expected, degree=1)

    for n in range(1, top + 1):
        bad = 0
        for word in words_of_length(2, n):
            if not is_w_admissible(word):
                continue
            t = delta_w(Series(E01, n, {word: 1}))
            bad += _cube(t, 0) != _cube(t, 1)
        report.add("Δ coassociative on W-words", bad == 0, degree=n, expected=0, actual=bad)

    rng = random.Random(settings.seed)
    trials = settings.suite("coassoc").trials
    multiplicative = 0
    for _ in range(trials):
        u, v = random_w_element(top, rng, E01), random_w_element(top, rng, E01)
        multiplicative += delta_w(u * v) == delta_w(u) * delta_w(v)
    report.add("Δ(uv) = Δ(u)Δ(v)", multiplicative == trials, degree=top, expected=trials, actual=multiplicative)

    for n in range(2, max_degree + 1):
        lyndon_route = component("dmr0", n, cache)
        word_route = dmr0_component_oracle(n)
        report.add("dmr0 Lyndon route = word-space route", subspace_equal(lyndon_route, word_route), degree=n,
                   expected=word_route.dim, actual=lyndon_route.dim)
        if n in DMR0_DIMS:
            report.add("dim dmr0", lyndon_route.dim == DMR0_DIMS[n], degree=n,
                       expected=DMR0_DIMS[n], actual=lyndon_route.dim)

    logger.info("coassoc suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
