"""Logging configuration."""

import logging

from rich.console import Console
from rich.logging import RichHandler


def setup_logging(level: str = "INFO", format: str | None = None) -> logging.Logger:
    """Configure logging.

    Log records go to stderr through rich so they never mix with CSV or
    table output on stdout.

    Args:
        level: Log level
        format: Log format

    Returns:
        Package logger
    """
    if format is None:
        format = "%(name)s - %(message)s"

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=format,
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )

    # Set third-party library log levels
    logging.getLogger("numexpr").setLevel(logging.WARNING)

    return logging.getLogger("bcall")
