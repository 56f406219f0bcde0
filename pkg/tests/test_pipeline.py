"""Tests for the end-to-end pipeline and its artifacts."""

import json

import pandas as pd
import pytest

from bcall.errors import ConfigError, DataError
from bcall.reporting import ArtifactWriter
from bcall.runner import PipelineRunner, RunConfig, run_pipeline
from bcall.synth import SynthConfig, generate_panel, yearly_configs


@pytest.fixture
def bloc_votes(tmp_path):
    """Two noise-free blocs of 5 over three years, 20 roll calls each."""
    configs = yearly_configs(SynthConfig.blocs(5, 20, seed=1, year=2014), 3)
    path = tmp_path / "votes.csv"
    generate_panel(configs).to_frame().to_csv(path, index=False)
    return path


def test_run_config_rejects_bad_values(tmp_path):
    for kwargs in (
        {"period": "weekly"},
        {"groups": "kmeans"},
        {"min_participation": 1.5},
        {"max_refine_iters": -1},
        {"aggregate": "region"},
        {"adapter": "parlgov"},
        {"unity_weighting": "log"},
        {"parallel": 0},
    ):
        with pytest.raises(ConfigError):
            RunConfig(input=tmp_path / "votes.csv", **kwargs)


def test_blocs_get_opposite_ideology(bloc_votes, tmp_path):
    result = PipelineRunner(RunConfig(input=bloc_votes, output_dir=tmp_path / "out")).run()
    assert [str(p.period) for p in result.periods] == ["2014", "2015", "2016"]
    for period in result.periods:
        for score in period.scores:
            expected = -1.0 if period.parties[score.legislator_id] == "L" else 1.0
            assert score.d1 == pytest.approx(expected)
            assert score.d2 == pytest.approx(0.0)


def test_bloc_aggregation_uses_cluster_labels(bloc_votes, tmp_path):
    config = RunConfig(input=bloc_votes, aggregate="bloc", output_dir=tmp_path / "out")
    result = PipelineRunner(config).run()
    assert {s.group for s in result.indices} == {"left", "right"}
    assert all(s.rice == 1.0 for s in result.indices)
    assert {row.scope for row in result.cohesion} == {"left", "right", "all"}


def test_cohesion_needs_three_cells(bloc_votes, tmp_path):
    config = RunConfig(input=bloc_votes, period="ranges=2014-01-01..2016-12-31", output_dir=tmp_path)
    result = PipelineRunner(config).run()
    assert all(not row.report.defined for row in result.cohesion)
    assert any("insufficient aggregation cells" in w for w in result.warnings)


def test_empty_period_is_skipped(bloc_votes, tmp_path):
    config = RunConfig(
        input=bloc_votes,
        period="ranges=2014-01-01..2016-12-31,2020-01-01..2020-12-31",
        output_dir=tmp_path,
    )
    result = PipelineRunner(config).run()
    skipped = result.periods[1]
    assert skipped.skipped == "empty period"
    assert skipped.scores == []
    assert any("[2020] skipped" in w for w in result.warnings)


def test_exclusion(bloc_votes, tmp_path):
    config = RunConfig(input=bloc_votes, exclude=("L001", "NOBODY"), output_dir=tmp_path)
    result = PipelineRunner(config).run()
    assert result.excluded == ["L001"]
    assert all(s.legislator_id != "L001" for s in result.scores)
    assert any("NOBODY" in w for w in result.warnings)


def test_missing_labels_carry_period(bloc_votes, tmp_path):
    labels = tmp_path / "labels.csv"
    labels.write_text("legislator_id,cluster\nL001,left\n")
    config = RunConfig(input=bloc_votes, groups=f"file={labels}", output_dir=tmp_path)
    with pytest.raises(DataError) as excinfo:
        PipelineRunner(config).run()
    assert excinfo.value.period == "2014"


def test_parallel_matches_sequential(bloc_votes, tmp_path):
    sequential = PipelineRunner(RunConfig(input=bloc_votes, output_dir=tmp_path)).run()
    parallel = PipelineRunner(RunConfig(input=bloc_votes, parallel=3, output_dir=tmp_path)).run()
    assert sequential.scores == parallel.scores


def test_progress_callback(bloc_votes, tmp_path):
    events = []
    PipelineRunner(RunConfig(input=bloc_votes, output_dir=tmp_path)).run(
        progress_callback=lambda event, period, current, total: events.append((event, current, total))
    )
    assert events[0] == ("start", 0, 3)
    assert events[-1] == ("period_complete", 3, 3)


def test_run_pipeline_writes_artifacts(bloc_votes, tmp_path):
    out = tmp_path / "out"
    run_pipeline(RunConfig(input=bloc_votes, output_dir=out))
    for name in ("scores.csv", "clusters.csv", "indices.csv", "plot.csv", "cohesion.csv", "manifest.json"):
        assert (out / name).exists()
    assert not list(out.glob(".*.tmp"))

    scores = pd.read_csv(out / "scores.csv", dtype={"period": str})
    assert list(scores.columns) == [
        "legislator_id", "legislator_name", "party", "period", "n_votes", "d1", "d2", "group",
    ]
    assert len(scores) == 30

    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["input"] == {"legislators": 10, "rollcalls": 60, "excluded": []}
    period = manifest["periods"][0]
    assert period["status"] == "scored"
    assert period["retained"] == 20
    assert period["refinement"]["converged"] is True
    assert manifest["unity_weighting"] == "closeness"
    assert "output_dir" not in manifest["config"]


def test_clusters_file_reproduces_scores(bloc_votes, tmp_path):
    first = tmp_path / "first"
    second = tmp_path / "second"
    run_pipeline(RunConfig(input=bloc_votes, output_dir=first))
    run_pipeline(RunConfig(input=bloc_votes, groups=f"file={first / 'clusters.csv'}", output_dir=second))
    assert (first / "scores.csv").read_bytes() == (second / "scores.csv").read_bytes()


def test_writer_rejects_unknown_artifact(bloc_votes, tmp_path):
    result = PipelineRunner(RunConfig(input=bloc_votes, output_dir=tmp_path)).run()
    with pytest.raises(ValueError, match="Unknown artifacts"):
        ArtifactWriter(tmp_path).write_run(result, ("scores", "pdf"))
