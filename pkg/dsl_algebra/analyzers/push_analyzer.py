"""Push suite: dmr0 lies in the inert Lie algebra, push has the expected order."""
import logging
from typing import Optional

from dsl_algebra.algebra.inertia import from_einf, is_push_invariant, push
from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.words import E01, EINF, words_of_length
from dsl_algebra.analyzers.component_analyzer import component
from dsl_algebra.linalg.exact import subspace_contains
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache

logger = logging.getLogger(__name__)

# dmr0 dimensions in degrees 2..8
DMR0_DIMS = {2: 0, 3: 1, 4: 0, 5: 1, 6: 0, 7: 1, 8: 1}


def push_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="push", max_degree=max_degree, seed=settings.seed)

    e0e1 = Series(E01, 2, {bytes([0, 1]): 1})
    report.add("push(e0e1) = e1e0", push(e0e1) == Series(E01, 2, {bytes([1, 0]): 1}), degree=2)

    for n in range(2, max_degree + 1):
        dmr0 = component("dmr0", n, cache)
        ginert = component("ginert", n, cache)
        if n in DMR0_DIMS:
            report.add("dim dmr0", dmr0.dim == DMR0_DIMS[n], degree=n, expected=DMR0_DIMS[n], actual=dmr0.dim)
        elements = lyndon_basis(E01, n).elements(dmr0)
        invariant = sum(1 for a in elements if is_push_invariant(a))
        report.add("dmr0 basis push-invariant", invariant == len(elements), degree=n,
                   expected=len(elements), actual=invariant)
        report.add("dmr0 ⊆ ginert", subspace_contains(dmr0, ginert), degree=n,
                   expected=dmr0.dim, actual=ginert.dim)

    # on a monomial with r letters e0, push has order r + 1
    for n in range(1, min(max_degree, 6) + 1):
        bad = 0
        for word in words_of_length(2, n):
            original = from_einf(Series(EINF, n, {word: 1}))
            image = original
            for _ in range(word.count(0) + 1):
                image = push(image)
            if image != original:
                bad += 1
        report.add("push order on e_inf monomials", bad == 0, degree=n, expected=0, actual=bad)

    logger.info("push suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
