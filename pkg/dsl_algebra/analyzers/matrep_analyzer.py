"""Matrep suite: rho_DT, the twisted coproduct and commutant parameterizations."""
import logging
import random
from typing import Optional

from sympy import Poly, symbols

from dsl_algebra.algebra.matrep import (BiMatrix, commutant_dimension, cv_e0_basis, cv_e0_bruteforce, delta_rho,
                                        delta_w_rl, dt_constants, e, f, f_inf, m_param, m_param_slice,
                                        rho_commutant_slice, rho_dt)
from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import BiSeries
from dsl_algebra.algebra.words import E01
from dsl_algebra.linalg.exact import subspace_equal
from dsl_algebra.models.config_models import Settings
from dsl_algebra.models.report_models import VerificationReport
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.sampling import random_rational

logger = logging.getLogger(__name__)


def _stabilizer_relations(report: VerificationReport) -> None:
    n = 3
    c = dt_constants(n)
    e0 = BiMatrix([[e(0, n)]])
    report.add("R·ρ0 = e0·R", c.R_dt * c.rho0 == e0 * c.R_dt)
    report.add("ρ0·C = C·e0", c.rho0 * c.C_dt == c.C_dt * e0)
    report.add("R·ρ1 = 0", (c.R_dt * c.rho1).is_zero())
    report.add("ρ1·C = 0", (c.rho1 * c.C_dt).is_zero())
    report.add("R·C = -(e0 + f_inf)", (c.R_dt * c.C_dt)[0, 0] == -(e(0, n) + f_inf(n)))
    report.add("rho_dt(e0) = ρ0", rho_dt(Series.letter(E01, 0, n)) == c.rho0)
    report.add("rho_dt(e0e1) = ρ0ρ1", rho_dt(Series(E01, n, {bytes([0, 1]): 1})) == c.rho0 * c.rho1)


def _random_m_param(rng: random.Random, n: int) -> BiMatrix:
    u, v = symbols("u v")
    phi = Poly(sum(random_rational(rng) * u ** i * v ** j for i in range(2) for j in range(2 - i)) + 1, u, v)
    entries = []
    for _ in range(2):
        row = []
        for _ in range(2):
            row.append(BiSeries.scalar(random_rational(rng), n) + e(0, n).scale(random_rational(rng))
                       + f(1, n).scale(random_rational(rng)))
        entries.append(row)
    return m_param(phi, BiMatrix(entries), n)


def matrep_suite(max_degree: int, settings: Settings, cache: Optional[BasisCache] = None) -> VerificationReport:
    report = VerificationReport(suite="matrep", max_degree=max_degree, seed=settings.seed)
    suite = settings.suite("matrep")

    for n in range(1, max_degree + 1):
        left, right = delta_rho(n), delta_w_rl(n)
        report.add("delta_rho = delta_w_rl", left == right, degree=n,
                   expected=len(right.terms), actual=len(left.terms))
    report.notes.append("delta_rho(n) carries f1·f0^(n-1); the f0·f1^(n-1) ordering does not match delta_w_rl")

    _stabilizer_relations(report)

    rng = random.Random(settings.seed)
    commuting = 0
    for _ in range(suite.trials):
        m = _random_m_param(rng, 4)
        commuting += m.commutator(dt_constants(4).rho1).is_zero()
    report.add("[M(φ,m), ρ1] = 0", commuting == suite.trials, expected=suite.trials, actual=commuting)

    for d in range(0, min(max_degree, suite.commutant_degree_cap) + 1):
        consts = dt_constants(d + 1)
        dim_one, space_one = commutant_dimension([consts.rho1], d)
        family = m_param_slice(d)
        report.add("commutant{ρ1} = M(φ,m) slice", subspace_equal(space_one, family), degree=d,
                   expected=family.dim, actual=dim_one)
        dim_both, space_both = commutant_dimension([consts.rho0, consts.rho1], d)
        expected = 1 if d == 0 else 2 ** d - 1
        slice_ = rho_commutant_slice(d)
        report.add("commutant{ρ0,ρ1} = k·I + C·C(e0)·R slice",
                   subspace_equal(space_both, slice_) and dim_both == expected,
                   degree=d, expected=expected, actual=dim_both)
        brute = cv_e0_bruteforce(d)
        report.add("C(e0) = k[e0] ⊗ V", subspace_equal(cv_e0_basis(d), brute), degree=d,
                   expected=cv_e0_basis(d).dim, actual=brute.dim)

    logger.info("matrep suite: %d checks, passed=%s", len(report.entries), report.passed)
    return report
