"""Compare command implementation for the B-Call CLI."""

from pathlib import Path

from rich.console import Console
from rich.table import Table

from bcall.cli.common import exit_on_error, load_settings

console = Console()


def _cell(value) -> str:
    if value is None or value != value:
        return "-"
    return f"{value:.3f}"


def compare_scores(
    scores_a: Path,
    scores_b: Path,
    column_a: str | None = None,
    column_b: str | None = None,
    top_k: int = 10,
    out: Path | None = None,
    config: Path | None = None,
):
    """
    Correlate two score files and write comparison.csv, comparison.json and
    discrepancies.csv.

    Args:
        scores_a: First score file
        scores_b: Second score file
        column_a: Score column of the first file (default score, else d1)
        column_b: Score column of the second file
        top_k: Least cohesive legislators flagged per period
        out: Output directory
        config: Configuration file path
    """
    from bcall.evaluation.aggregator import compare_files
    from bcall.reporting.writer import ArtifactWriter

    with exit_on_error():
        settings = load_settings(config)
        comparison = compare_files(scores_a, scores_b, column_a, column_b, k=top_k)
        ArtifactWriter(out or Path(settings.output_dir)).write_comparison(comparison)

    table = Table(title="Score Comparison", show_header=True, header_style="bold magenta")
    table.add_column("Period", style="cyan")
    for name in ("r", "SE", "rho", "SE", "n"):
        table.add_column(name, justify="right")
    for _, row in comparison.summary_frame().iterrows():
        n = row["n"]
        table.add_row(
            str(row["period"]),
            _cell(row["r"]),
            _cell(row["se"]),
            _cell(row["rho"]),
            _cell(row["rho_se"]),
            "-" if n != n else (f"{n:.1f}" if row["period"] == "SD" else str(int(n))),
        )
    console.print(table)
