from dataclasses import dataclass
import os
from pathlib import Path
from typing import Any, Dict, Optional
import warnings

import yaml

from golaysc.errors import ConfigError

CONFIG_FILE_NAME = "golaysc.yaml"
LOG_LEVELS = ("ERROR", "WARN", "INFO", "DEBUG")


def read_config(yaml_file=None) -> Dict[str, Any]:
    """
    Reads configuration variables from a YAML file (default golaysc.yaml) and any present environment variables
    """
    config: Dict[str, Any] = {}
    try:
        yaml_file = find_config() if yaml_file is None else yaml_file
        if yaml_file and os.path.exists(yaml_file):
            with open(yaml_file, "r") as file:
                config = yaml.safe_load(file) or {}
            if not isinstance(config, dict):
                raise ValueError(f"{yaml_file} does not contain a mapping")
    except Exception as e:
        config = {}
        warnings.warn(
            f"Could not read {CONFIG_FILE_NAME} or the file is damaged, proceeding with environment variables only. Error: {e}"
        )

    # environment variables win over the file
    for key, value in os.environ.items():
        if key.startswith("GOLAYSC_"):
            config[key] = value

    return config


def find_config() -> Optional[str]:
    def traverse(start_path):
        current_path = Path(start_path).resolve()

        while current_path != current_path.parent:
            config_file = current_path / CONFIG_FILE_NAME
            if config_file.is_file():
                return config_file
            current_path = current_path.parent

        return None

    found = traverse(os.getcwd())
    if found is None:
        found = traverse(Path(__file__).parent)

    return None if found is None else str(found)


@dataclass(frozen=True)
class Settings:
    list_size: int = 16
    max_paths: int = 4096
    min_frames: int = 100000
    min_errors: int = 200
    max_frames: int = 10000000
    batch_size: int = 1000
    workers: int = 1
    log_level: str = "INFO"


_INT_KEYS = {
    "GOLAYSC_LIST_SIZE": "list_size",
    "GOLAYSC_MAX_PATHS": "max_paths",
    "GOLAYSC_MIN_FRAMES": "min_frames",
    "GOLAYSC_MIN_ERRORS": "min_errors",
    "GOLAYSC_MAX_FRAMES": "max_frames",
    "GOLAYSC_BATCH_SIZE": "batch_size",
    "GOLAYSC_WORKERS": "workers",
}


def settings(values: Optional[Dict[str, Any]] = None) -> Settings:
    """
    Typed view of the configuration.

    Raises:
        ConfigError: if a value is not a positive integer or an unknown log level.
    """
    values = config if values is None else values
    kwargs: Dict[str, Any] = {}
    for key, field_name in _INT_KEYS.items():
        if key not in values:
            continue
        try:
            number = int(values[key])
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {values[key]!r}")
        if number < 1:
            raise ConfigError(f"{key} must be positive, got {number}")
        kwargs[field_name] = number

    if "GOLAYSC_LOG_LEVEL" in values:
        level = str(values["GOLAYSC_LOG_LEVEL"]).upper()
        if level not in LOG_LEVELS:
            raise ConfigError(f"GOLAYSC_LOG_LEVEL must be one of {LOG_LEVELS}, got {level!r}")
        kwargs["log_level"] = level

    return Settings(**kwargs)


config = read_config()
