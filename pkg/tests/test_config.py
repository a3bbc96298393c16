import pytest

from dsl_algebra.exceptions import InputFormatError
from dsl_algebra.models.config_models import Settings, SuiteSettings
from dsl_algebra.utils.config_loader import default_cache_dir, load_settings, load_yaml


def test_packaged_defaults():
    settings = load_settings(environ={"DSL_CACHE": "/tmp/dsl"})
    assert settings.seed == 1729
    assert settings.max_degree == 4
    assert settings.cache_dir == "/tmp/dsl"
    assert settings.suite("theta").group_truncation == 6
    assert settings.suite("theta").trials >= 20
    assert settings.degree_for("exactness") == 4


def test_environment_overrides():
    settings = load_settings(environ={"DSL_SEED": "7", "DSL_CACHE": "/tmp/other"})
    assert settings.seed == 7
    assert settings.cache_dir == "/tmp/other"
    with pytest.raises(InputFormatError):
        load_settings(environ={"DSL_SEED": "seven"})


def test_overlay_and_flags(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("max_degree: 9\nsuites:\n  exactness:\n    trials: 2\n")
    settings = load_settings(str(path), overrides={"seed": 3, "jobs": None},
                             environ={"DSL_SEED": "7", "DSL_CACHE": str(tmp_path)})
    assert settings.seed == 3
    assert settings.jobs == 1
    assert settings.max_degree == 9
    assert settings.degree_for("exactness") == 6
    assert settings.suite("exactness").trials == 2


def test_bad_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("- a list\n")
    with pytest.raises(InputFormatError):
        load_yaml(str(path))
    with pytest.raises(InputFormatError):
        load_yaml(str(tmp_path / "missing.yaml"))
    path.write_text("max_degree: many\n")
    with pytest.raises(InputFormatError):
        load_settings(str(path), environ={})


def test_empty_yaml_is_empty_mapping(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_yaml(str(path)) == {}


def test_default_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert default_cache_dir() == str(tmp_path / "dsl_algebra")
    assert load_settings(environ={}).cache_dir == str(tmp_path / "dsl_algebra")


def test_degree_caps():
    settings = Settings(max_degree=10, suites={"push": SuiteSettings(degree_cap=8)})
    assert settings.degree_for("push") == 8
    assert settings.degree_for("kv") == 10
