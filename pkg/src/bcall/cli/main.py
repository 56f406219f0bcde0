"""
B-Call CLI main entry point.

This module provides the main CLI interface using Typer: ingest roll-call
data, cluster legislators, compute scores and cohesion indices, compare
score files and generate synthetic legislatures.

Exit codes: 0 success, 1 data error, 2 configuration error.
"""

from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console

app = typer.Typer(
    name="bcall",
    help="B-Call - two-dimensional legislative voting scores",
    add_completion=False,
    pretty_exceptions_enable=False,
)
console = Console()

InputOpt = Annotated[Path, typer.Option("--input", "-i", help="Votes file")]
AdapterOpt = Annotated[str | None, typer.Option("--adapter", help="Input format (canonical/voteview)")]
MembersOpt = Annotated[Path | None, typer.Option("--members", help="Voteview members file")]
RollcallsOpt = Annotated[Path | None, typer.Option("--rollcalls", help="Voteview rollcalls file (dates)")]
PeriodOpt = Annotated[str | None, typer.Option("--period", help="year, or ranges=[LABEL:]START..END,...")]
MinPartOpt = Annotated[
    float | None, typer.Option("--min-participation", help="Minimum share of non-absent casts")
]
GroupsOpt = Annotated[
    str | None, typer.Option("--groups", help="cluster, file=<path>, party=<path> or score=<path>")
]
AnchorOpt = Annotated[str | None, typer.Option("--anchor-left", help="Legislator id declared LEFT")]
RefineOpt = Annotated[int | None, typer.Option("--max-refine-iters", help="Refinement sweep budget")]
AggregateOpt = Annotated[str | None, typer.Option("--aggregate", help="Index groups (party/bloc)")]
UnityOpt = Annotated[
    str | None, typer.Option("--unity-weighting", help="UNITY weighting (closeness/uniform)")
]
ExcludeOpt = Annotated[str | None, typer.Option("--exclude", help="Legislator ids to drop, comma-separated")]
ParallelOpt = Annotated[int | None, typer.Option("--parallel", "-p", help="Periods processed in parallel")]
SeedOpt = Annotated[int | None, typer.Option("--seed", help="Seed recorded in the manifest")]
OutOpt = Annotated[Path | None, typer.Option("--out", "-o", help="Output directory")]
ConfigOpt = Annotated[Path | None, typer.Option("--config", "-c", help="Configuration file path")]


def _pipeline(artifacts: tuple[str, ...], **options):
    from bcall.cli.run import run_command

    run_command(artifacts=artifacts, **options)


@app.command()
def ingest(
    input: InputOpt,
    adapter: AdapterOpt = None,
    members: MembersOpt = None,
    rollcalls: RollcallsOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
):
    """Convert a votes file to the canonical long CSV (votes.csv)."""
    from bcall.cli.ingest import ingest_votes

    ingest_votes(input=input, adapter=adapter, members=members, rollcalls=rollcalls, out=out, config=config)


@app.command()
def run(
    input: InputOpt,
    adapter: AdapterOpt = None,
    members: MembersOpt = None,
    rollcalls: RollcallsOpt = None,
    period: PeriodOpt = None,
    min_participation: MinPartOpt = None,
    groups: GroupsOpt = None,
    anchor_left: AnchorOpt = None,
    max_refine_iters: RefineOpt = None,
    aggregate: AggregateOpt = None,
    unity_weighting: UnityOpt = None,
    exclude: ExcludeOpt = None,
    parallel: ParallelOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
):
    """Run the full pipeline and write every artifact."""
    _pipeline(("scores", "clusters", "indices", "plot", "cohesion", "manifest"), **locals())


@app.command()
def cluster(
    input: InputOpt,
    adapter: AdapterOpt = None,
    members: MembersOpt = None,
    rollcalls: RollcallsOpt = None,
    period: PeriodOpt = None,
    min_participation: MinPartOpt = None,
    groups: GroupsOpt = None,
    anchor_left: AnchorOpt = None,
    max_refine_iters: RefineOpt = None,
    exclude: ExcludeOpt = None,
    parallel: ParallelOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
):
    """Split legislators into LEFT and RIGHT per period (clusters.csv)."""
    _pipeline(("clusters", "manifest"), **locals())


@app.command()
def score(
    input: InputOpt,
    adapter: AdapterOpt = None,
    members: MembersOpt = None,
    rollcalls: RollcallsOpt = None,
    period: PeriodOpt = None,
    min_participation: MinPartOpt = None,
    groups: GroupsOpt = None,
    anchor_left: AnchorOpt = None,
    max_refine_iters: RefineOpt = None,
    exclude: ExcludeOpt = None,
    parallel: ParallelOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
):
    """Compute d1 and d2 per legislator and period (scores.csv, plot.csv)."""
    _pipeline(("scores", "clusters", "plot", "manifest"), **locals())


@app.command()
def indices(
    input: InputOpt,
    adapter: AdapterOpt = None,
    members: MembersOpt = None,
    rollcalls: RollcallsOpt = None,
    period: PeriodOpt = None,
    min_participation: MinPartOpt = None,
    groups: GroupsOpt = None,
    anchor_left: AnchorOpt = None,
    max_refine_iters: RefineOpt = None,
    aggregate: AggregateOpt = None,
    unity_weighting: UnityOpt = None,
    exclude: ExcludeOpt = None,
    parallel: ParallelOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
):
    """Compute RICE and UNITY and compare them with mean d2 (indices.csv, cohesion.csv)."""
    _pipeline(("indices", "cohesion", "manifest"), **locals())


@app.command()
def compare(
    scores_a: Annotated[Path, typer.Argument(help="First score file (e.g. scores.csv)")],
    scores_b: Annotated[Path, typer.Argument(help="Second score file (legislator_id, period, score)")],
    column_a: Annotated[str | None, typer.Option("--column-a", help="Score column of the first file")] = None,
    column_b: Annotated[str | None, typer.Option("--column-b", help="Score column of the second file")] = None,
    top_k: Annotated[int, typer.Option("--top-k", help="Least cohesive legislators flagged per period")] = 10,
    out: OutOpt = None,
    config: ConfigOpt = None,
):
    """Correlate two score files period by period."""
    from bcall.cli.compare import compare_scores

    compare_scores(
        scores_a=scores_a,
        scores_b=scores_b,
        column_a=column_a,
        column_b=column_b,
        top_k=top_k,
        out=out,
        config=config,
    )


@app.command()
def synth(
    out: OutOpt = None,
    mode: Annotated[str | None, typer.Option("--mode", help="random or blocs")] = None,
    legislators: Annotated[int | None, typer.Option("--legislators", help="Number of legislators")] = None,
    rollcalls: Annotated[int | None, typer.Option("--rollcalls", help="Roll calls per period")] = None,
    sigma_min: Annotated[float | None, typer.Option("--sigma-min", help="Lowest noise")] = None,
    sigma_max: Annotated[float | None, typer.Option("--sigma-max", help="Highest noise")] = None,
    abstain_prob: Annotated[float | None, typer.Option("--abstain-prob", help="Abstention probability")] = None,
    absent_prob: Annotated[float | None, typer.Option("--absent-prob", help="Absence probability")] = None,
    year: Annotated[int | None, typer.Option("--year", help="First year")] = None,
    periods: Annotated[int | None, typer.Option("--periods", help="Number of yearly periods")] = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Random seed")] = None,
    config: ConfigOpt = None,
):
    """Generate a synthetic legislature (votes.csv, truth.csv)."""
    from bcall.cli.synth import generate_synth

    generate_synth(
        out=out,
        config=config,
        mode=mode,
        n_legislators=legislators,
        n_rollcalls=rollcalls,
        sigma_min=sigma_min,
        sigma_max=sigma_max,
        abstain_prob=abstain_prob,
        absent_prob=absent_prob,
        year=year,
        periods=periods,
        seed=seed,
    )


@app.command()
def config(
    action: str = typer.Argument("show", help="Action type (show/validate/init)"),
    path: Path | None = typer.Argument(None, help="Configuration file path"),
):
    """Configuration management."""
    from bcall.cli.config import manage_config

    manage_config(action=action, path=path)


@app.command()
def version():
    """Show version information."""
    from bcall import __version__

    console.print(f"[bold green]B-Call[/bold green] v{__version__}")


if __name__ == "__main__":
    app()
