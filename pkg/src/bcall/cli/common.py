"""Shared CLI helpers: settings loading and error-to-exit-code mapping."""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from rich.console import Console

from bcall.errors import ConfigError, DataError

console = Console()

EXIT_DATA_ERROR = 1
EXIT_CONFIG_ERROR = 2


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn package errors into a red message and the matching exit code."""
    try:
        yield
    except ConfigError as e:
        console.print(f"[red]Configuration error: {e}[/red]")
        raise typer.Exit(EXIT_CONFIG_ERROR) from None
    except DataError as e:
        console.print(f"[red]Data error: {e}[/red]")
        raise typer.Exit(EXIT_DATA_ERROR) from None


def load_settings(config: Path | None = None):
    """Load settings and configure logging from them."""
    from bcall.config.settings import Settings
    from bcall.utils.logging import setup_logging

    settings = Settings.load(config)
    setup_logging(settings.log_level)
    return settings


def split_ids(value: str | None) -> tuple[str, ...] | None:
    if value is None:
        return None
    return tuple(v.strip() for v in value.split(",") if v.strip())
