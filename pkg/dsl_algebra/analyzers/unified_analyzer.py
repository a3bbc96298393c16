"""Dispatch of verification suites and aggregation for `verify all`."""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

from dsl_algebra.analyzers.coproduct_analyzer import coproduct_suite
from dsl_algebra.analyzers.exactness_analyzer import exactness_suite
from dsl_algebra.analyzers.ihara_analyzer import ihara_suite
from dsl_algebra.analyzers.kv_analyzer import kv_suite
from dsl_algebra.analyzers.matrep_analyzer import matrep_suite
from dsl_algebra.analyzers.push_analyzer import push_suite
from dsl_algebra.analyzers.theta_analyzer import theta_suite
from dsl_algebra.analyzers.torsor_analyzer import torsor_suite
from dsl_algebra.models.config_models import SUITES, Settings
from dsl_algebra.models.report_models import CheckEntry, VerificationReport
from dsl_algebra.utils.cache import BasisCache

logger = logging.getLogger(__name__)

SuiteRunner = Callable[[int, Settings, Optional[BasisCache]], VerificationReport]

SUITE_RUNNERS: Dict[str, SuiteRunner] = {
    "push": push_suite,
    "theta": theta_suite,
    "ihara": ihara_suite,
    "coassoc": coproduct_suite,
    "matrep": matrep_suite,
    "exactness": exactness_suite,
    "torsor": torsor_suite,
    "kv": kv_suite,
}


def run_suite(name: str, settings: Settings) -> VerificationReport:
    """Run one suite at the configured degree, clipped by the suite's cap."""
    if name not in SUITE_RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")
    degree = settings.degree_for(name)
    if degree < settings.max_degree:
        logger.info("suite %s capped at degree %d", name, degree)
    cache = BasisCache(settings.cache_dir)
    report = SUITE_RUNNERS[name](degree, settings, cache)
    logger.debug("suite %s: cache hits %d, misses %d", name, cache.hits, cache.misses)
    return report


def _run_named(args: Tuple[str, Settings]) -> VerificationReport:
    return run_suite(*args)


def run_suites(names: List[str], settings: Settings) -> List[VerificationReport]:
    if settings.jobs > 1 and len(names) > 1:
        logger.info("running %d suites on %d workers", len(names), settings.jobs)
        with ProcessPoolExecutor(max_workers=settings.jobs) as pool:
            return list(pool.map(_run_named, [(name, settings) for name in names]))
    return [run_suite(name, settings) for name in names]


def aggregate(reports: List[VerificationReport], settings: Settings) -> VerificationReport:
    """Fold suite reports into one, prefixing every check and note with its suite."""
    combined = VerificationReport(suite="all", max_degree=settings.max_degree, seed=settings.seed)
    for report in reports:
        for entry in report.entries:
            combined.entries.append(CheckEntry(**{**entry.model_dump(), "name": f"{report.suite}: {entry.name}"}))
        combined.notes.extend(f"{report.suite}: {note}" for note in report.notes)
    return combined


def unified_verification(suite: str, settings: Settings) -> Tuple[VerificationReport, List[VerificationReport]]:
    """The report for ``suite`` (or the aggregate for "all") and the per-suite reports behind it."""
    names = list(SUITES) if suite == "all" else [suite]
    reports = run_suites(names, settings)
    if suite == "all":
        return aggregate(reports, settings), reports
    return reports[0], reports
