import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from dsl_algebra.exceptions import InputFormatError
from dsl_algebra.models.config_models import Settings

logger = logging.getLogger(__name__)

DEFAULTS_PATH = Path(__file__).resolve().parent.parent / "config" / "defaults.yaml"


def load_yaml(yaml_path: str) -> Dict[str, Any]:
    """Load a YAML mapping; an empty file is an empty mapping"""
    try:
        with open(yaml_path, 'r') as file:
            content = yaml.safe_load(file)
    except (OSError, yaml.YAMLError) as e:
        raise InputFormatError(f"could not read config {yaml_path}: {e}") from None
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise InputFormatError(f"config {yaml_path} is not a mapping")
    return content


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def default_cache_dir() -> str:
    xdg = os.environ.get("XDG_CACHE_HOME")
    root = Path(xdg) if xdg else Path.home() / ".cache"
    return str(root / "dsl_algebra")


def load_settings(config_path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None,
                  environ: Optional[Dict[str, str]] = None) -> Settings:
    """Packaged defaults, then the user file, then DSL_SEED/DSL_CACHE, then explicit overrides."""
    env = os.environ if environ is None else environ
    data = load_yaml(str(DEFAULTS_PATH))
    if config_path:
        data = _merge(data, load_yaml(config_path))
        logger.info("loaded config overlay %s", config_path)

    if env.get("DSL_SEED"):
        try:
            data["seed"] = int(env["DSL_SEED"])
        except ValueError:
            raise InputFormatError(f"DSL_SEED must be an integer, got {env['DSL_SEED']!r}") from None
    if env.get("DSL_CACHE"):
        data["cache_dir"] = env["DSL_CACHE"]

    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    if not data.get("cache_dir"):
        data["cache_dir"] = default_cache_dir()

    try:
        settings = Settings(**data)
    except ValidationError as e:
        raise InputFormatError(f"invalid configuration: {e}") from None
    logger.debug("settings: %s", settings.model_dump())
    return settings
