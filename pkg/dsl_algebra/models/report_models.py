from pydantic import BaseModel, Field, computed_field
from typing import List, Optional, Union

Value = Union[bool, int, str, None]


class CheckEntry(BaseModel):
    """Outcome of one named check, optionally tied to a degree"""
    name: str
    degree: Optional[int] = None
    expected: Value = None
    actual: Value = None
    passed: bool


class VerificationReport(BaseModel):
    suite: str
    max_degree: int
    seed: int
    entries: List[CheckEntry] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def add(self, name: str, passed: bool, degree: Optional[int] = None,
            expected: Value = None, actual: Value = None) -> CheckEntry:
        entry = CheckEntry(name=name, degree=degree, expected=expected, actual=actual, passed=bool(passed))
        self.entries.append(entry)
        return entry

    def failures(self) -> List[CheckEntry]:
        return [entry for entry in self.entries if not entry.passed]
