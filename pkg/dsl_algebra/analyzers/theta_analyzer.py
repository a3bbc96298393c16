"""
Theta suite: the Lie-level involution, the explicit formula for b_a and the
group layer (⊛, h_g, Θ, Γ/σ).
"""
import logging
import random
from typing import List, Optional, Tuple

from dsl_algebra.algebra.group import (GroupElement, abelianization, circledast, group_theta,
                                       inertia_residual, make_inert_group_element, solve_h)
from dsl_algebra.algebra.harmonic import sigma_series, truncate_poly
from dsl_algebra.algebra.inertia import (b_of, e_inf, is_push_invariant, lie_bracket_span_rank,
                                         lie_theta, solve_b)
from dsl_algebra.algebra.lie import ihara_bracket, lyndon_basis
from dsl_algebra.algebra.series import Series, lie_bracket
from dsl_algebra.algebra.words import E01
from dsl_algebra.analyzers.component_analyzer import component
from dsl_algebra.exceptions import AlgebraError
from dsl_algebra.linalg.exact import subspace_equal
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.sampling import random_lie_series

logger = logging.getLogger(__name__)


def ihara_degree_pairs(max_degree: int) -> List[Tuple[int, int]]:
    """Every ordered (m, n) with m, n >= 2 and m + n <= max_degree."""
    return [(m, n) for m in range(2, max_degree - 1) for n in range(2, max_degree + 1 - m)]


def _lie_level(report: VerificationReport, max_degree: int, cache: Optional[BasisCache]) -> None:
    for n in range(2, max_degree + 1):
        basis = lyndon_basis(E01, n)
        ginert = component("ginert", n, cache)
        e0 = Series.letter(E01, 0, n + 1)
        solved = involution = stays_inert = 0
        for a in basis.elements(ginert):
            b = b_of(a)
            lifted = a.with_max_degree(n + 1)
            relation = lie_bracket(lifted, e0) + lie_bracket(b.with_max_degree(n + 1), e_inf(n + 1))
            if relation.is_zero() and solve_b(a) == b:
                solved += 1
            image = lie_theta(a)
            if is_push_invariant(image):
                stays_inert += 1
                if lie_theta(image) == a:
                    involution += 1
        report.add("[a,e0] + [b_a,e_inf] = 0 and solve_b = b_a", solved == ginert.dim, degree=n,
                   expected=ginert.dim, actual=solved)
        report.add("lie_theta(ginert) ⊆ ginert", stays_inert == ginert.dim, degree=n,
                   expected=ginert.dim, actual=stays_inert)
        report.add("lie_theta² = id on ginert", involution == ginert.dim, degree=n,
                   expected=ginert.dim, actual=involution)

        dmr0 = component("dmr0", n, cache)
        image = basis.span([lie_theta(a) for a in basis.elements(dmr0)])
        report.add("lie_theta(dmr0) = dmr0", subspace_equal(image, dmr0), degree=n,
                   expected=dmr0.dim, actual=image.dim)

        span_rank, next_dim = lie_bracket_span_rank(n)
        formula = 2 * basis.dim - next_dim
        report.notes.append(
            f"degree {n}: rank of [Lie_n,e0]+[Lie_n,e_inf] is {span_rank} of {next_dim}; "
            f"dim ginert = {ginert.dim}, 2·dim Lie_n - dim Lie_(n+1) = {formula}")

    for m, n in ihara_degree_pairs(max_degree):
        pairs = [(a, b) for a in lyndon_basis(E01, m).elements(component("ginert", m, cache), m + n)
                 for b in lyndon_basis(E01, n).elements(component("ginert", n, cache), m + n)]
        good = 0
        for a, b in pairs:
            bracket = ihara_bracket(a, b).truncate(m + n)
            if not is_push_invariant(bracket):
                continue
            lhs = lie_theta(bracket)
            rhs = ihara_bracket(lie_theta(a), lie_theta(b)).truncate(m + n)
            good += lhs == rhs
        if pairs:
            report.add(f"lie_theta respects the Ihara bracket ({m},{n})", good == len(pairs),
                       degree=m + n, expected=len(pairs), actual=good)


def _random_group_element(rng: random.Random, n_max: int) -> GroupElement:
    return GroupElement.from_log(random_lie_series(E01, range(2, n_max + 1), rng, n_max))


def _group_level(report: VerificationReport, settings: Settings) -> None:
    suite = settings.suite("theta")
    rng = random.Random(settings.seed)
    n_group = suite.group_truncation

    associative = 0
    for _ in range(suite.trials):
        g, h, k = (_random_group_element(rng, 5) for _ in range(3))
        associative += circledast(circledast(g, h), k) == circledast(g, circledast(h, k))
    report.add("⊛ associative", associative == suite.trials, degree=5,
               expected=suite.trials, actual=associative)

    commutator = GroupElement.from_log(Series(E01, n_group, {bytes([0, 1]): 1, bytes([1, 0]): -1}))
    report.add("solve_h(exp([e0,e1])) is none", solve_h(commutator) is None, degree=n_group)

    sigma_ok = abel_ok = 0
    for _ in range(suite.trials):
        g, h = _random_group_element(rng, n_group), _random_group_element(rng, n_group)
        product = sigma_series(g.series, n_group) * sigma_series(h.series, n_group)
        sigma_ok += sigma_series(circledast(g, h).series, n_group) == truncate_poly(product, n_group)
        a = random_lie_series(E01, range(1, n_group + 1), rng, n_group)
        b = random_lie_series(E01, range(1, n_group + 1), rng, n_group)
        left = abelianization(a.exp() * b.exp())
        right = tuple(x + y for x, y in zip(abelianization(a.exp()), abelianization(b.exp())))
        abel_ok += left == right and abelianization(g.series) == (0, 0)
    report.add("σ(g⊛h) = σ(g)σ(h)", sigma_ok == suite.trials, degree=n_group,
               expected=suite.trials, actual=sigma_ok)
    report.add("abelianization additive, trivial on G", abel_ok == suite.trials, degree=n_group,
               expected=suite.trials, actual=abel_ok)

    built = involution = residual_ok = leading_ok = homomorphism = 0
    elements = []
    for k in range(suite.trials):
        g = make_inert_group_element(settings.seed + k, n_group)
        if g is None:
            report.notes.append(f"inert element generator failed for seed {settings.seed + k}")
            continue
        built += 1
        elements.append(g)
        h = solve_h(g)
        theta = group_theta(g)
        if h is None or theta is None:
            continue
        residual_ok += inertia_residual(g.series.truncate(n_group - 1), h.series).is_zero()
        twice = group_theta(theta)
        involution += twice is not None and twice == g
        log_g, log_theta = g.log(), theta.log()
        low = log_g.lowest_degree()
        if low is None:
            leading_ok += log_theta.is_zero()
        else:
            try:
                leading_ok += (log_theta.graded_component(low).with_max_degree(low)
                               == lie_theta(log_g.graded_component(low).truncate(low)))
            except AlgebraError as e:
                logger.warning("leading term of seed %s: %s", settings.seed + k, e)
    report.add("inert group elements constructed", built > 0, degree=n_group,
               expected=suite.trials, actual=built)
    report.add("Ad_g(e0) + e1 + Ad_h(e_inf) = 0", residual_ok == built, degree=n_group,
               expected=built, actual=residual_ok)
    report.add("Θ² = id", involution == built, degree=n_group, expected=built, actual=involution)
    report.add("leading term of log Θ(g) = lie_theta", leading_ok == built, degree=n_group,
               expected=built, actual=leading_ok)

    for g, h in zip(elements, elements[1:] + elements[:1]):
        product = group_theta(circledast(g, h))
        thetas = group_theta(g), group_theta(h)
        homomorphism += (product is not None and None not in thetas
                         and product == circledast(*thetas))
    pairs = len(elements)
    report.add("Θ(g⊛h) = Θ(g)⊛Θ(h)", homomorphism == pairs, degree=n_group,
               expected=pairs, actual=homomorphism)


def theta_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="theta", max_degree=max_degree, seed=settings.seed)
    _lie_level(report, max_degree, cache)
    _group_level(report, settings)
    logger.info("theta suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
