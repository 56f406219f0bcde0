"""Tests for the command-line interface."""

import json

import pandas as pd
import pytest
from typer.testing import CliRunner

from bcall.cli import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("BCALL_LOG_LEVEL", raising=False)
    monkeypatch.delenv("BCALL_OUTPUT_DIR", raising=False)


@pytest.fixture
def synth_dir(tmp_path):
    out = tmp_path / "synth"
    result = runner.invoke(app, [
        "synth", "--out", str(out), "--mode", "blocs", "--legislators", "10",
        "--rollcalls", "20", "--periods", "3", "--seed", "1",
    ])
    assert result.exit_code == 0, result.output
    return out


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert "B-Call v1.0.0" in result.output


def test_synth_writes_votes_and_truth(synth_dir):
    votes = pd.read_csv(synth_dir / "votes.csv")
    assert len(votes) == 10 * 60
    truth = pd.read_csv(synth_dir / "truth.csv")
    assert set(truth["party"]) == {"L", "R"}
    metadata = json.loads((synth_dir / "synth.json").read_text())
    assert metadata["rng"] == "numpy.PCG64"
    assert metadata["seeds"] == [1, 2, 3]


def test_run_writes_all_artifacts(synth_dir, tmp_path):
    out = tmp_path / "run"
    result = runner.invoke(app, ["run", "--input", str(synth_dir / "votes.csv"), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "Run completed" in result.output
    for name in ("scores.csv", "clusters.csv", "indices.csv", "plot.csv", "cohesion.csv", "manifest.json"):
        assert (out / name).exists()


def test_cluster_writes_only_clusters(synth_dir, tmp_path):
    out = tmp_path / "cluster"
    result = runner.invoke(app, [
        "cluster", "-i", str(synth_dir / "votes.csv"), "-o", str(out), "--anchor-left", "L006",
    ])
    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in out.iterdir()) == ["clusters.csv", "manifest.json"]
    clusters = pd.read_csv(out / "clusters.csv")
    assert set(clusters.loc[clusters["legislator_id"] == "L006", "cluster"]) == {"left"}


def test_score_then_compare(synth_dir, tmp_path):
    out = tmp_path / "score"
    result = runner.invoke(app, ["score", "-i", str(synth_dir / "votes.csv"), "-o", str(out)])
    assert result.exit_code == 0, result.output
    result = runner.invoke(app, [
        "compare", str(out / "scores.csv"), str(out / "scores.csv"), "--top-k", "2", "--out", str(out),
    ])
    assert result.exit_code == 0, result.output
    comparison = pd.read_csv(out / "comparison.csv", dtype={"period": str})
    assert comparison["period"].tolist() == ["2000", "2001", "2002", "M", "SD"]
    assert (out / "discrepancies.csv").exists()


def test_config_error_exit_code(synth_dir):
    result = runner.invoke(app, ["run", "-i", str(synth_dir / "votes.csv"), "--period", "weekly"])
    assert result.exit_code == 2
    assert "Configuration error" in result.output


def test_data_error_exit_code(tmp_path):
    result = runner.invoke(app, ["run", "-i", str(tmp_path / "missing.csv")])
    assert result.exit_code == 1
    assert "Data error" in result.output


def test_ingest(synth_dir, tmp_path):
    out = tmp_path / "ingested"
    result = runner.invoke(app, ["ingest", "-i", str(synth_dir / "votes.csv"), "-o", str(out)])
    assert result.exit_code == 0, result.output
    assert (out / "votes.csv").read_bytes() == (synth_dir / "votes.csv").read_bytes()


def test_config_init_and_validate(tmp_path):
    path = tmp_path / "bcall.yaml"
    assert runner.invoke(app, ["config", "init", str(path)]).exit_code == 0
    result = runner.invoke(app, ["config", "validate", str(path)])
    assert result.exit_code == 0
    assert "passed" in result.output

    path.write_text("pipeline:\n  aggregate: region\n")
    assert runner.invoke(app, ["config", "validate", str(path)]).exit_code == 2
    path.write_text("pipeline:\n  colour: red\n")
    assert runner.invoke(app, ["config", "validate", str(path)]).exit_code == 2


def test_config_show_and_unknown_action():
    result = runner.invoke(app, ["config", "show"])
    assert result.exit_code == 0
    assert "min_participation" in result.output
    assert runner.invoke(app, ["config", "explode"]).exit_code == 2
