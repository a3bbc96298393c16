from pydantic import BaseModel, Field
from typing import Dict, Optional

SUITES = ("push", "theta", "ihara", "coassoc", "matrep", "exactness", "torsor", "kv")


class SuiteSettings(BaseModel):
    """Per-suite knobs; degree caps clip --max-degree for the heavy suites"""
    trials: int = 20
    degree_cap: Optional[int] = None
    group_truncation: int = 6
    commutant_degree_cap: int = 3


class Settings(BaseModel):
    """Resolved run configuration"""
    seed: int = 1729
    max_degree: int = 4
    cache_dir: Optional[str] = None
    jobs: int = 1
    suites: Dict[str, SuiteSettings] = Field(default_factory=dict)

    def suite(self, name: str) -> SuiteSettings:
        return self.suites.get(name, SuiteSettings())

    def degree_for(self, name: str) -> int:
        cap = self.suite(name).degree_cap
        return self.max_degree if cap is None else min(self.max_degree, cap)
