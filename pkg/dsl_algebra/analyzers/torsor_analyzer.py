"""Torsor suite: factorizations of manufactured pairs (a, b) with a·x = (x+z)·b."""
import logging
import random
from typing import Optional, Tuple

from dsl_algebra.algebra.lie import is_lie_series
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.torsor import torsor_factor, torsor_identities
from dsl_algebra.algebra.words import XY
from dsl_algebra.exceptions import AlgebraError
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.sampling import random_lie_series, random_nonzero_rational, random_series

logger = logging.getLogger(__name__)


def manufacture_instance(rng: random.Random, n_max: int) -> Tuple[Series, Series, Series]:
    """(a, b, z) built from a known witness (h, gamma, c), known through degree n_max + 1."""
    top = n_max + 1
    h = random_lie_series(XY, range(1, n_max + 1), rng, top).exp()
    gamma = Series.scalar(random_nonzero_rational(rng), XY, top)
    c = random_series(XY, n_max - 1, rng, density=0.4).with_max_degree(top)
    x = Series.letter(XY, "x", top)
    a = h * (gamma + x * c)
    b = h * (gamma + c * x)
    z = h.conjugate(x) - x
    return a, b, z


def torsor_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    suite = settings.suite("torsor")
    n_max = suite.group_truncation
    report = VerificationReport(suite="torsor", max_degree=n_max, seed=settings.seed)

    one = Series.one(XY, n_max)
    xy = Series(XY, n_max, {bytes([0, 1]): 1})
    yx = Series(XY, n_max, {bytes([1, 0]): 1})
    example = torsor_factor(one + xy, one + yx, Series.zero(XY, n_max), n_max)
    report.add("(1+xy, 1+yx, 0) -> c = y",
               example.c == Series.letter(XY, "y", n_max - 1) and example.gamma == 1 and example.h == one)

    rng = random.Random(settings.seed)
    solved = lie = 0
    for k in range(suite.trials):
        a, b, z = manufacture_instance(rng, n_max)
        try:
            result = torsor_factor(a, b, z, n_max)
        except AlgebraError as e:
            logger.warning("torsor instance %d: %s", k, e)
            continue
        solved += all(torsor_identities(a, b, z, result))
        lie += is_lie_series(result.h.log())
    report.add("a = h(γ+xc), b = h(γ+cx), x+z = h x h⁻¹", solved == suite.trials, degree=n_max,
               expected=suite.trials, actual=solved)
    report.add("log h is Lie", lie == suite.trials, degree=n_max, expected=suite.trials, actual=lie)
    logger.info("torsor suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
