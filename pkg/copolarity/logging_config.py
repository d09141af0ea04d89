"""
Logging Configuration Module - Package logger for the case searches

All modules log through children of the "copolarity" logger. Records go to a
rotating file under logs/; a console handler is optional and always writes to
stderr, because stdout carries the rendered reports and must stay
byte-identical between runs.

Author: Copolarity-Verify
"""

import logging
import logging.handlers
import sys
from typing import Any, Dict, Optional

from .config import Config, get_config

PACKAGE_LOGGER = "copolarity"

FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
CONSOLE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _file_handler(config: Config, log_file: str, level: int, settings: Dict[str, Any]) -> logging.Handler:
    path = config.resolve_path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.handlers.RotatingFileHandler(
        path,
        maxBytes=settings.get("max_bytes", 10 * 1024 * 1024),
        backupCount=settings.get("backup_count", 5),
        encoding="utf-8",
    )
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
    return handler


def _console_handler(level: int) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, datefmt="%H:%M:%S"))
    return handler


def setup_logging(log_file: Optional[str] = None, log_level: Optional[str] = None,
                  config: Optional[Config] = None) -> logging.Logger:
    """
    Configure the package logger.

    Args:
        log_file: Log file path, relative paths resolved against the project
                  root (default logging.log_file)
        log_level: DEBUG, INFO, WARNING or ERROR (default logging.log_level)
        config: Settings source (the process-wide Config when None)

    Returns:
        The "copolarity" logger with its handlers replaced
    """
    config = config or get_config()
    settings = config.get_logging_config()
    log_file = log_file or settings.get("log_file", "logs/copolarity.log")
    level = getattr(logging, (log_level or settings.get("log_level", "INFO")).upper(), logging.INFO)

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    logger.propagate = False  # root handlers never see package records
    # repeated setup replaces handlers instead of stacking them
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)

    logger.addHandler(_file_handler(config, log_file, level, settings))
    if settings.get("console_enabled", False):
        logger.addHandler(_console_handler(level))
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Logger for a module: get_logger(__name__).

    Names outside the package are placed under it, so every record reaches
    the package handlers.
    """
    if name is None or name == PACKAGE_LOGGER:
        return logging.getLogger(PACKAGE_LOGGER)
    if name.startswith(PACKAGE_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{PACKAGE_LOGGER}.{name}")


_initialized = False


def initialize_logging() -> None:
    """Set up logging once per process."""
    global _initialized
    if not _initialized:
        setup_logging()
        _initialized = True


initialize_logging()
