"""
Configuration Management Module - Scan bounds, verify defaults and logging settings

Values come from three layers, later ones winning:
    1. Config.DEFAULT_CONFIG
    2. A JSON file (config/default_config.json unless another path is given)
    3. Environment variables:
         COPOL_SCAN_BOUND         scan.max_highest_weight and scan.max_tensor_dim
         COPOL_DIOPHANTINE_BOUND  scan.diophantine_bound
         COPOL_LOG_LEVEL          logging.log_level
Command line flags are applied on top by the CLI.

Author: Copolarity-Verify
"""

import copy
import json
import os
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

PROJECT_ROOT: Path = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_PATH: Path = PROJECT_ROOT / "config" / "default_config.json"

VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
VALID_MODES = ("paper", "exact")
VALID_FORMATS = ("json", "md")
VALID_DISCREPANCY_EXIT_CODES = (0, 3)

SCAN_KEYS = ("max_highest_weight", "max_tensor_dim", "max_irrep_weight", "diophantine_bound", "involution_check_dim")

# variable -> (parser, keys it sets)
ENV_OVERRIDES: Dict[str, Tuple[Callable[[str], Any], Tuple[str, ...]]] = {
    "COPOL_SCAN_BOUND": (int, ("scan.max_highest_weight", "scan.max_tensor_dim")),
    "COPOL_DIOPHANTINE_BOUND": (int, ("scan.diophantine_bound",)),
    "COPOL_LOG_LEVEL": (str.upper, ("logging.log_level",)),
}


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class Config:
    """
    Layered configuration with dot-notation access.

    Attributes:
        config: Current configuration dictionary
        config_file: File the configuration was loaded from, if any
    """

    DEFAULT_CONFIG: Dict[str, Any] = {
        "scan": {
            "max_highest_weight": 50,
            "max_tensor_dim": 50,
            "max_irrep_weight": 20,
            "diophantine_bound": 1000000,
            "involution_check_dim": 8,
        },
        "verify": {
            "mode": "paper",
            "format": "json",
            "baseline_file": "config/baselines/paper_bound.json",
            "exact_discrepancy_exit_code": 3,
            "workers": 1,
        },
        "logging": {
            "log_file": "logs/copolarity.log",
            "log_level": "INFO",
            "max_bytes": 10 * 1024 * 1024,
            "backup_count": 5,
            "console_enabled": False,
        },
    }

    def __init__(self, config_file: Optional[str] = None,
                 environ: Optional[Mapping[str, str]] = None) -> None:
        """
        Args:
            config_file: JSON file to merge over the defaults; when None the
                         project's config/default_config.json is used if present
            environ: Mapping read for overrides (os.environ when None)

        Raises:
            FileNotFoundError: If config_file is given and missing
            ValueError: If a resulting value is invalid
        """
        self.config: Dict[str, Any] = copy.deepcopy(self.DEFAULT_CONFIG)
        self.config_file: Optional[Path] = None

        if config_file:
            self.load_config(config_file)
        elif DEFAULT_CONFIG_PATH.exists():
            self.load_config(str(DEFAULT_CONFIG_PATH))

        self._apply_env_overrides(os.environ if environ is None else environ)
        self.validate()

    def load_config(self, file_path: str) -> None:
        """
        Merge a JSON file over the current values.

        Raises:
            FileNotFoundError: If the file doesn't exist
            json.JSONDecodeError: If the file is not valid JSON
        """
        config_path = Path(file_path)
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {file_path}")
        with open(config_path, "r", encoding="utf-8") as f:
            self._merge_config(self.config, json.load(f))
        self.config_file = config_path

    def _merge_config(self, base: Dict[str, Any], override: Dict[str, Any]) -> None:
        # sections merge key by key, anything else replaces
        for key, value in override.items():
            if isinstance(base.get(key), dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def _apply_env_overrides(self, environ: Mapping[str, str]) -> None:
        """Unparsable values are ignored."""
        for variable, (parse, keys) in ENV_OVERRIDES.items():
            raw = environ.get(variable)
            if not raw:
                continue
            try:
                value = parse(raw.strip())
            except ValueError:
                continue
            for key in keys:
                self.set(key, value)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Value at a dotted key, e.g. config.get("scan.max_highest_weight").

        Returns default when any part of the path is missing.
        """
        value: Any = self.config
        try:
            for part in key.split("."):
                value = value[part]
        except (KeyError, TypeError):
            return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set a dotted key, creating intermediate sections."""
        *parents, last = key.split(".")
        section = self.config
        for part in parents:
            section = section.setdefault(part, {})
        section[last] = value

    def validate(self) -> None:
        """
        Raises:
            ValueError: If a scan bound, verify setting or log level is invalid
        """
        for key in SCAN_KEYS:
            bound = self.get(f"scan.{key}")
            if not _is_int(bound) or bound <= 0:
                raise ValueError(f"Invalid scan.{key}: {bound!r} (must be a positive integer)")
        # tensor factors start at C^2
        if self.get("scan.max_tensor_dim") < 2:
            raise ValueError(f"Invalid scan.max_tensor_dim: {self.get('scan.max_tensor_dim')} (must be >= 2)")

        checks = (
            ("verify.mode", VALID_MODES),
            ("verify.format", VALID_FORMATS),
            ("verify.exact_discrepancy_exit_code", VALID_DISCREPANCY_EXIT_CODES),
        )
        for key, allowed in checks:
            value = self.get(key)
            # True == 1 would otherwise pass the membership test
            if isinstance(value, bool) or value not in allowed:
                raise ValueError(f"Invalid {key}: {value!r} (must be one of {', '.join(map(str, allowed))})")

        workers = self.get("verify.workers")
        if not _is_int(workers) or workers < 1:
            raise ValueError(f"Invalid verify.workers: {workers!r}")

        log_level = self.get("logging.log_level")
        if not isinstance(log_level, str) or log_level.upper() not in VALID_LOG_LEVELS:
            raise ValueError(f"Invalid logging.log_level: {log_level!r}")

    def resolve_path(self, path: str) -> Path:
        """
        Absolute paths and paths existing relative to the current directory
        are returned as given; anything else is taken against the project root.
        """
        candidate = Path(path)
        if candidate.is_absolute() or candidate.exists():
            return candidate
        return PROJECT_ROOT / candidate

    def get_scan_config(self) -> Dict[str, Any]:
        return self.get("scan", {})

    def get_verify_config(self) -> Dict[str, Any]:
        return self.get("verify", {})

    def get_logging_config(self) -> Dict[str, Any]:
        return self.get("logging", {})


_global_config: Optional[Config] = None


def get_config(config_file: Optional[str] = None) -> Config:
    """
    Process-wide Config, created on first use.

    Args:
        config_file: Only honored by the call that creates the instance
    """
    global _global_config
    if _global_config is None:
        _global_config = Config(config_file)
    return _global_config


def reset_config() -> None:
    """Drop the process-wide Config so the next get_config() reloads it."""
    global _global_config
    _global_config = None
