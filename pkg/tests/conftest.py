import pytest

from dsl_algebra.models.config_models import Settings, SuiteSettings
from dsl_algebra.utils.cache import BasisCache


@pytest.fixture
def settings(tmp_path):
    """Small, fast settings: few trials and low group truncations."""
    return Settings(
        seed=1729,
        max_degree=4,
        cache_dir=str(tmp_path / "cache"),
        suites={
            "theta": SuiteSettings(trials=1, group_truncation=4),
            "ihara": SuiteSettings(trials=10),
            "coassoc": SuiteSettings(trials=3),
            "matrep": SuiteSettings(trials=2, commutant_degree_cap=1),
            "torsor": SuiteSettings(trials=2, group_truncation=4),
            "kv": SuiteSettings(trials=5),
        },
    )


@pytest.fixture
def cache(settings):
    return BasisCache(settings.cache_dir)
