import logging
from typing import Optional

import pandas as pd

from dsl_algebra.algebra.exactness import COMPLEXES, exactness_table
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache

logger = logging.getLogger(__name__)


def exactness_dataframe(max_degree: int) -> pd.DataFrame:
    """Rank table of every complex in degrees 1..max_degree."""
    rows = []
    for which in COMPLEXES:
        for result in exactness_table(which, range(1, max_degree + 1)):
            rows.append(result._asdict())
    return pd.DataFrame(rows)


def exactness_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="exactness", max_degree=max_degree, seed=settings.seed)
    df = exactness_dataframe(max_degree)
    for row in df.itertuples(index=False):
        report.add(f"{row.which}: composite is zero", bool(row.composite_zero), degree=int(row.degree))
        report.add(f"{row.which}: ker = im", bool(row.exact), degree=int(row.degree),
                   expected=int(row.kernel_second), actual=int(row.rank_first))
    logger.info("exactness suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
