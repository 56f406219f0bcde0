"""
Pipeline command implementation for the B-Call CLI.

Backs the run, cluster, score and indices commands, which share one
pipeline and differ only in the artifacts they write.
"""

from pathlib import Path

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

from bcall.cli.common import exit_on_error, load_settings, split_ids

console = Console()


def run_command(
    artifacts: tuple[str, ...],
    input: Path,
    config: Path | None = None,
    out: Path | None = None,
    exclude: str | None = None,
    **overrides,
):
    """
    Core logic of the pipeline commands.

    Args:
        artifacts: Artifacts to write
        input: Votes file
        config: Configuration file path
        out: Output directory
        exclude: Legislator ids to drop, comma-separated
        overrides: Remaining flags; None keeps the configured value
    """
    from bcall.reporting.writer import ArtifactWriter
    from bcall.runner.pipeline import PipelineRunner

    with exit_on_error():
        settings = load_settings(config)
        run_config = settings.run_config(
            input,
            output_dir=out,
            exclude=split_ids(exclude),
            **overrides,
        )

        console.print("\n[bold cyan]B-Call Run Configuration[/bold cyan]")
        console.print(f"  Input: [yellow]{run_config.input}[/yellow] ({run_config.adapter})")
        console.print(f"  Periods: [yellow]{run_config.policy.describe()}[/yellow]")
        console.print(f"  Groups: [yellow]{run_config.source.describe()}[/yellow]")
        console.print(f"  Output Dir: [yellow]{run_config.output_dir}[/yellow]")

        runner = PipelineRunner(run_config)
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=console,
            transient=True,
        ) as progress:
            task_id = None

            def _progress_callback(event, period, current, total):
                nonlocal task_id
                if event == "start":
                    task_id = progress.add_task("[cyan]Periods[/cyan]", total=total)
                elif task_id is not None:
                    progress.update(task_id, completed=current, description=f"[cyan]Periods[/cyan]  {period}")

            result = runner.run(progress_callback=_progress_callback)

        paths = ArtifactWriter(run_config.output_dir).write_run(result, artifacts)

    table = Table(title="Run Summary", show_header=True, header_style="bold magenta")
    table.add_column("Period", style="cyan")
    table.add_column("Legislators", justify="right")
    table.add_column("Roll calls", justify="right")
    table.add_column("Dropped", justify="right")
    table.add_column("Scored", justify="right", style="green")
    table.add_column("Status")
    for period in result.periods:
        table.add_row(
            str(period.period),
            str(period.n_legislators),
            str(period.n_rollcalls),
            str(period.batch.dropped if period.batch else period.n_rollcalls),
            str(len(period.scores)),
            period.skipped or "ok",
        )
    console.print(table)

    if result.warnings:
        console.print(f"\n[yellow]{len(result.warnings)} warnings (see manifest.json)[/yellow]")
    console.print("\n[bold green]Run completed![/bold green]")
    for path in paths:
        console.print(f"  [cyan]{path}[/cyan]")
