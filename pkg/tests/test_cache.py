import json

import pytest

from dsl_algebra.exceptions import CacheError
from dsl_algebra.linalg.exact import Subspace
from dsl_algebra.utils.cache import BasisCache


def sample():
    return Subspace(2, [[1, 1]])


def test_store_and_load(tmp_path):
    cache = BasisCache(str(tmp_path))
    path = cache.store("dmr0", 3, sample())
    assert path.name == "dmr0-3.json"
    assert json.loads(path.read_text())["schema"] == "dsl-cache/1"
    assert cache.load("dmr0", 3) == sample()
    assert cache.load("dmr0", 4) is None


def test_get_or_compute_counts(tmp_path):
    cache = BasisCache(str(tmp_path))
    calls = []

    def compute(n):
        calls.append(n)
        return sample()

    assert cache.get_or_compute("ginert", 3, compute) == sample()
    assert cache.get_or_compute("ginert", 3, compute) == sample()
    assert calls == [3]
    assert (cache.hits, cache.misses) == (1, 1)


def test_corrupt_record_is_a_miss(tmp_path):
    cache = BasisCache(str(tmp_path))
    path = cache.store("dmr0", 3, sample())
    data = json.loads(path.read_text())
    data["payload"]["basis"] = [["1", "2"]]
    path.write_text(json.dumps(data))
    assert cache.load("dmr0", 3) is None
    path.write_text("{")
    assert cache.load("dmr0", 3) is None


def test_undecodable_record_is_recomputed(tmp_path):
    cache = BasisCache(str(tmp_path))
    path = cache.store("dmr0", 3, sample())
    path.write_bytes(b"\xff\xfe garbage")
    assert cache.load("dmr0", 3) is None
    assert cache.get_or_compute("dmr0", 3, lambda n: sample()) == sample()
    assert cache.misses == 1
    assert cache.load("dmr0", 3) == sample()


def test_schema_and_key_mismatch(tmp_path):
    cache = BasisCache(str(tmp_path))
    path = cache.store("dmr0", 3, sample())
    data = json.loads(path.read_text())
    data["schema"] = "dsl-cache/0"
    path.write_text(json.dumps(data))
    assert cache.load("dmr0", 3) is None
    path = cache.store("dmr0", 3, sample())
    (tmp_path / "dmr0-5.json").write_text(path.read_text())
    assert cache.load("dmr0", 5) is None


def test_disabled_cache():
    cache = BasisCache(None)
    assert cache.load("dmr0", 3) is None
    assert cache.store("dmr0", 3, sample()) is None
    with pytest.raises(CacheError):
        cache.path_for("dmr0", 3)


def test_unwritable_directory(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(CacheError):
        BasisCache(str(blocker / "sub")).store("dmr0", 3, sample())
