"""Synth command implementation for the B-Call CLI."""

from dataclasses import replace
from pathlib import Path

from rich.console import Console

from bcall.cli.common import exit_on_error, load_settings

console = Console()


def generate_synth(out: Path | None = None, config: Path | None = None, **overrides) -> list[Path]:
    """Generate a synthetic legislature and write votes.csv, truth.csv and synth.json.

    Args:
        out: Output directory
        config: Configuration file path
        overrides: SynthSettings fields; None keeps the configured value

    Returns:
        Written file paths
    """
    from bcall.reporting.writer import ArtifactWriter
    from bcall.synth.generator import generate_panel

    with exit_on_error():
        settings = load_settings(config)
        synth_settings = replace(settings.synth, **{k: v for k, v in overrides.items() if v is not None})
        result = generate_panel(synth_settings.to_configs())

        writer = ArtifactWriter(out or Path(settings.output_dir))
        paths = [
            writer.write_frame("votes.csv", result.to_frame()),
            writer.write_frame("truth.csv", result.truth_frame()),
            writer.write_json("synth.json", {**result.metadata, "settings": vars(synth_settings)}),
        ]

    console.print(
        f"[green]Generated {len(result.matrix.legislators)} legislators x "
        f"{len(result.matrix.rollcalls)} roll calls[/green]"
    )
    for path in paths:
        console.print(f"  [cyan]{path}[/cyan]")
    return paths
