"""
On-disk cache of computed subspaces.

One JSON file per (object, degree). Records carry a schema tag and the
sha256 of their canonical payload; anything that fails either check is
treated as a miss and overwritten by the recomputed value.
"""
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

from pydantic import ValidationError

from dsl_algebra.exceptions import CacheError
from dsl_algebra.linalg.exact import Subspace
from dsl_algebra.models.records import CACHE_SCHEMA, CacheRecord, SubspaceRecord
from dsl_algebra.utils.serialization import subspace_from_record, subspace_to_record

logger = logging.getLogger(__name__)


def payload_hash(payload: SubspaceRecord) -> str:
    text = json.dumps(payload.model_dump(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class BasisCache:
    """Subspace cache rooted at ``directory``; ``None`` disables persistence."""

    def __init__(self, directory: Optional[str]):
        self.directory = Path(directory) if directory else None
        self.hits = 0
        self.misses = 0

    def path_for(self, name: str, degree: int) -> Path:
        if self.directory is None:
            raise CacheError("cache is disabled")
        return self.directory / f"{name}-{degree}.json"

    def load(self, name: str, degree: int) -> Optional[Subspace]:
        if self.directory is None:
            return None
        path = self.path_for(name, degree)
        if not path.exists():
            return None
        try:
            record = CacheRecord.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, ValidationError) as e:
            logger.warning("ignoring unreadable cache record %s: %s", path, e)
            return None
        if record.schema_tag != CACHE_SCHEMA:
            logger.warning("ignoring cache record %s with schema %r", path, record.schema_tag)
            return None
        if record.key != {"object": name, "degree": degree}:
            logger.warning("ignoring cache record %s with key %r", path, record.key)
            return None
        if payload_hash(record.payload) != record.content_hash:
            logger.warning("ignoring cache record %s: content hash mismatch", path)
            return None
        logger.debug("cache hit %s", path)
        return subspace_from_record(record.payload)

    def store(self, name: str, degree: int, subspace: Subspace) -> Optional[Path]:
        if self.directory is None:
            return None
        payload = subspace_to_record(subspace)
        record = CacheRecord(schema_tag=CACHE_SCHEMA, key={"object": name, "degree": degree},
                             payload=payload, content_hash=payload_hash(payload))
        path = self.path_for(name, degree)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=f".{path.name}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    handle.write(record.model_dump_json(by_alias=True))
                    handle.write("\n")
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as e:
            raise CacheError(f"could not write {path}: {e}") from e
        logger.debug("cache store %s", path)
        return path

    def get_or_compute(self, name: str, degree: int, compute: Callable[[int], Subspace]) -> Subspace:
        cached = self.load(name, degree)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        subspace = compute(degree)
        self.store(name, degree, subspace)
        return subspace
