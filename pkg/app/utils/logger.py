"""
Named loggers routed through rich, writing to stderr so reports on stdout stay clean
"""

import os
import logging
from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "dispersive"

_configured = False


def _configure():
    global _configured
    root = logging.getLogger(ROOT_LOGGER)
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(os.getenv("LOG_LEVEL", "INFO").upper())
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Get a logger under the package namespace"""
    if not _configured:
        _configure()
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def set_log_level(level: str):
    """Change the level of every package logger at once"""
    if not _configured:
        _configure()
    logging.getLogger(ROOT_LOGGER).setLevel(level.upper())
