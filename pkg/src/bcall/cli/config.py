"""`bcall config`: print the effective settings, check a file or write a template."""

from pathlib import Path

import typer
import yaml
from rich.console import Console
from rich.syntax import Syntax

from bcall.cli.common import EXIT_CONFIG_ERROR, exit_on_error

console = Console()


def manage_config(action: str = "show", path: Path | None = None):
    """Dispatch a config action.

    Args:
        action: show, validate or init
        path: File to read (show/validate) or write (init)
    """
    if action == "show":
        _show_config(path)
    elif action == "validate":
        _validate_config(path)
    elif action == "init":
        _init_config(path)
    else:
        console.print(f"[red]Unknown action: {action}[/red]")
        console.print("Available actions: show, validate, init")
        raise typer.Exit(EXIT_CONFIG_ERROR)


def _show_config(path: Path | None = None):
    """Display the effective configuration."""
    from bcall.config.settings import Settings

    console.print("\n[bold cyan]Current Configuration[/bold cyan]")
    with exit_on_error():
        settings = Settings.load(path)
    content = yaml.safe_dump(settings.to_dict(), sort_keys=False)
    console.print(Syntax(content, "yaml", theme="monokai", line_numbers=False))


def _validate_config(path: Path | None = None):
    """Validate configuration file."""
    from bcall.config.settings import Settings

    console.print("\n[bold cyan]Validating Configuration[/bold cyan]")
    if path is None:
        console.print("[red]Please specify config file path[/red]")
        raise typer.Exit(EXIT_CONFIG_ERROR)

    with exit_on_error():
        errors = Settings.load(path).validate()

    if errors:
        console.print("[red]Configuration validation failed:[/red]")
        for error in errors:
            console.print(f"  - {error}")
        raise typer.Exit(EXIT_CONFIG_ERROR)
    console.print("[green]Configuration validation passed![/green]")


def _init_config(output: Path | None = None):
    """Print or write a configuration template."""
    content = _get_default_template()
    if output:
        output = Path(output)
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(content, encoding="utf-8")
        console.print(f"[green]Config file created: {output}[/green]")
    else:
        console.print(Syntax(content, "yaml", theme="monokai", line_numbers=True))


def _get_default_template() -> str:
    """Full configuration template."""
    return """# B-Call Configuration
pipeline:
  adapter: canonical          # canonical | voteview
  period: year                # year | ranges=[LABEL:]YYYY-MM-DD..YYYY-MM-DD,...
  min_participation: 0.10
  groups: cluster             # cluster | file=<path> | party=<path> | score=<path>
  anchor_left: null
  max_refine_iters: 100
  aggregate: party            # party | bloc
  parallel: 1
  exclude: []

indices:
  indices:
    - rice
    - unity
  unity_weighting: closeness  # closeness | uniform

synth:
  mode: random                # random | blocs
  n_legislators: 100
  n_rollcalls: 300
  sigma_min: 0.1
  sigma_max: 0.6
  bloc_theta: 0.8
  abstain_prob: 0.0
  absent_prob: 0.0
  year: 2000
  periods: 1
  seed: 0

output_dir: data/results
log_level: INFO
"""
