from pydantic import BaseModel, ConfigDict, Field
from typing import Dict, List, Union

CACHE_SCHEMA = "dsl-cache/1"


class SubspaceRecord(BaseModel):
    """A subspace in Lyndon coordinates, entries as exact "p/q" strings"""
    model_config = ConfigDict(frozen=True)

    ambient_dim: int
    basis: List[List[str]] = Field(default_factory=list)


class CacheRecord(BaseModel):
    """One cached (object, degree) computation"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_tag: str = Field(default=CACHE_SCHEMA, alias="schema")
    key: Dict[str, Union[str, int]]
    payload: SubspaceRecord
    content_hash: str
