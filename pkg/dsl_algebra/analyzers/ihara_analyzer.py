"""Ihara suite: antisymmetry, Jacobi and dmr0 closure of the Ihara bracket."""
import logging
import random
from typing import Optional

from dsl_algebra.algebra.lie import ihara_bracket, is_lie, lyndon_basis
from dsl_algebra.algebra.words import E01
from dsl_algebra.analyzers.component_analyzer import component
from dsl_algebra.linalg.exact import Subspace, subspace_contains
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.sampling import random_lie_element

logger = logging.getLogger(__name__)


def _random_degrees(rng: random.Random, total: int, parts: int):
    """Positive degrees summing to at most ``total``."""
    degrees = [1] * parts
    for _ in range(rng.randint(0, total - parts)):
        degrees[rng.randrange(parts)] += 1
    return degrees


def ihara_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="ihara", max_degree=max_degree, seed=settings.seed)
    rng = random.Random(settings.seed)
    trials = settings.suite("ihara").trials
    total = max(3, min(max_degree, 7))

    antisymmetric = jacobi = lie_valued = 0
    for _ in range(trials):
        da, db, dc = _random_degrees(rng, total, 3)
        n = da + db + dc
        a, b, c = (random_lie_element(E01, d, rng, n) for d in (da, db, dc))
        ab = ihara_bracket(a, b)
        antisymmetric += (ab + ihara_bracket(b, a)).is_zero()
        lie_valued += is_lie(ab)
        cyclic = (ihara_bracket(a, ihara_bracket(b, c))
                  + ihara_bracket(b, ihara_bracket(c, a))
                  + ihara_bracket(c, ihara_bracket(a, b)))
        jacobi += cyclic.is_zero()
    report.add("⟨a,b⟩ = -⟨b,a⟩", antisymmetric == trials, degree=total, expected=trials, actual=antisymmetric)
    report.add("⟨a,b⟩ is Lie", lie_valued == trials, degree=total, expected=trials, actual=lie_valued)
    report.add("Jacobi identity", jacobi == trials, degree=total, expected=trials, actual=jacobi)

    for m in range(2, max_degree + 1):
        for n in range(m, max_degree + 1 - m):
            left = lyndon_basis(E01, m).elements(component("dmr0", m, cache), m + n)
            right = lyndon_basis(E01, n).elements(component("dmr0", n, cache), m + n)
            if not left or not right:
                continue
            brackets = [ihara_bracket(a, b) for a in left for b in right]
            span = lyndon_basis(E01, m + n).span(brackets)
            target: Subspace = component("dmr0", m + n, cache)
            report.add(f"⟨dmr0_{m}, dmr0_{n}⟩ ⊆ dmr0_{m + n}", subspace_contains(span, target),
                       degree=m + n, expected=target.dim, actual=span.dim)

    logger.info("ihara suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
