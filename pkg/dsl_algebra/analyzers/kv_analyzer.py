"""KV suite: inertness through the (x, y) presentation, ds and the map nu."""
import logging
import random
from collections import Counter
from typing import Optional

from dsl_algebra.algebra.kv_bridge import (check_inert_equivalence, ds_component, is_sder, nu,
                                           nu_bracket_comparison, nu_rank_on_ds, pullback_inert,
                                           push_invariant_image)
from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.words import XY
from dsl_algebra.analyzers.component_analyzer import component
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.sampling import random_lie_element

logger = logging.getLogger(__name__)


def kv_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="kv", max_degree=max_degree, seed=settings.seed)
    rng = random.Random(settings.seed)
    trials = settings.suite("kv").trials

    for n in range(2, min(max_degree, 6) + 1):
        inert = lyndon_basis(XY, n).elements(pullback_inert(n))
        samples = [random_lie_element(XY, n, rng) for _ in range(trials)] + inert
        agree = sum(1 for f in samples if check_inert_equivalence(f) == push_invariant_image(f))
        positives = sum(1 for f in inert if check_inert_equivalence(f))
        report.add("inertness criterion agrees with push", agree == len(samples), degree=n,
                   expected=len(samples), actual=agree)
        report.add("pulled-back inert elements satisfy the criterion", positives == len(inert), degree=n,
                   expected=len(inert), actual=positives)

    for n in range(2, max_degree + 1):
        ds = ds_component(n, component("dmr0", n, cache))
        dmr0_dim = component("dmr0", n, cache).dim
        report.add("dim ds = dim dmr0", ds.dim == dmr0_dim, degree=n, expected=dmr0_dim, actual=ds.dim)
        rank = nu_rank_on_ds(n, ds)
        report.add("nu injective on ds", rank == ds.dim, degree=n, expected=ds.dim, actual=rank)
        elements = lyndon_basis(XY, n).elements(ds)
        special = sum(1 for f in elements if is_sder(nu(f)))
        report.add("nu(ds) ⊆ sder", special == len(elements), degree=n, expected=len(elements), actual=special)
    report.notes.append("krv membership is checked through the sder condition only; the trace condition is not tested")

    outcomes: Counter = Counter()
    for m in range(2, max_degree + 1):
        for n in range(m, max_degree + 1 - m):
            left = lyndon_basis(XY, m).elements(pullback_inert(m))
            right = lyndon_basis(XY, n).elements(pullback_inert(n))
            for f in left:
                for g in right:
                    outcomes[nu_bracket_comparison(f, g)] += 1
    if outcomes:
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(outcomes.items()))
        report.notes.append(f"nu against the transported Ihara bracket on inert pairs: {summary}")
    else:
        report.notes.append("nu against the Ihara bracket: no inert pairs within the degree range")

    logger.info("kv suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
