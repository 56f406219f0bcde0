"""Ingest command implementation for the B-Call CLI."""

from pathlib import Path

from rich.console import Console

from bcall.cli.common import exit_on_error, load_settings

console = Console()


def ingest_votes(
    input: Path,
    adapter: str | None = None,
    members: Path | None = None,
    rollcalls: Path | None = None,
    out: Path | None = None,
    config: Path | None = None,
) -> Path:
    """Read a votes file and write it back as canonical ``votes.csv``.

    Returns:
        Written file path
    """
    from bcall.dataset.loader import ingest, to_long_frame
    from bcall.reporting.writer import ArtifactWriter

    with exit_on_error():
        settings = load_settings(config)
        matrix = ingest(
            input,
            adapter or settings.pipeline.adapter,
            members_path=members,
            rollcalls_path=rollcalls,
        )
        path = ArtifactWriter(out or Path(settings.output_dir)).write_frame("votes.csv", to_long_frame(matrix))

    console.print(
        f"[green]Ingested {len(matrix.legislators)} legislators x "
        f"{len(matrix.rollcalls)} roll calls[/green] -> [cyan]{path}[/cyan]"
    )
    return path
