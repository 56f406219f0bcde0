"""Utility functions module."""

from bcall.utils.logging import setup_logging

__all__ = ["setup_logging"]
