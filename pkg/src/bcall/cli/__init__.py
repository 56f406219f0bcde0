"""CLI module."""

from bcall.cli.main import app

__all__ = ["app"]
