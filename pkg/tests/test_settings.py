"""Tests for configuration loading."""

from pathlib import Path

import pytest

from bcall.config import Settings
from bcall.config.settings import IndexConfig, PipelineConfig, SynthSettings
from bcall.errors import ConfigError


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """No configs directory and no BCALL_* variables."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("BCALL_LOG_LEVEL", raising=False)
    monkeypatch.delenv("BCALL_OUTPUT_DIR", raising=False)


def test_defaults():
    settings = Settings.load()
    assert settings.pipeline.min_participation == 0.10
    assert settings.pipeline.groups == "cluster"
    assert settings.pipeline.max_refine_iters == 100
    assert settings.indices.indices == ["rice", "unity"]
    assert settings.indices.unity_weighting == "closeness"
    assert settings.output_dir == "data/results"
    assert settings.validate() == []


def test_configs_directory(tmp_path):
    section = tmp_path / "configs" / "pipeline"
    section.mkdir(parents=True)
    (section / "default.yaml").write_text("pipeline:\n  period: ranges=2014-01-01..2014-12-31\n")
    assert Settings.load().pipeline.period == "ranges=2014-01-01..2014-12-31"


def test_config_file_and_env(tmp_path, monkeypatch):
    path = tmp_path / "bcall.yaml"
    path.write_text(
        "pipeline:\n  anchor_left: 12345\n  aggregate: bloc\n"
        "indices:\n  unity_weighting: uniform\n"
        "output_dir: results\nlog_level: DEBUG\n"
    )
    monkeypatch.setenv("BCALL_OUTPUT_DIR", "elsewhere")
    settings = Settings.load(path)
    assert settings.pipeline.anchor_left == "12345"
    assert settings.pipeline.aggregate == "bloc"
    assert settings.indices.unity_weighting == "uniform"
    assert settings.log_level == "DEBUG"
    assert settings.output_dir == "elsewhere"


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        Settings.load(tmp_path / "nope.yaml")


def test_invalid_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("pipeline: [unclosed\n")
    with pytest.raises(ConfigError, match="Invalid YAML"):
        Settings.load(path)
    path.write_text("- a\n- b\n")
    with pytest.raises(ConfigError, match="mapping"):
        Settings.load(path)


def test_unknown_keys_rejected():
    with pytest.raises(ConfigError, match="Unknown pipeline keys: colour"):
        PipelineConfig.from_dict({"colour": "red"})
    with pytest.raises(ConfigError):
        IndexConfig.from_dict({"weights": "x"})


def test_validate_collects_errors():
    settings = Settings()
    settings.pipeline.period = "weekly"
    settings.pipeline.min_participation = 2.0
    settings.indices.unity_weighting = "log"
    settings.log_level = "LOUD"
    errors = settings.validate()
    assert len(errors) == 4


def test_run_config_overrides():
    settings = Settings()
    settings.pipeline.parallel = 4
    config = settings.run_config(Path("votes.csv"), parallel=None, groups="file=labels.csv", exclude=("A",))
    assert config.parallel == 4
    assert config.source.kind == "file"
    assert config.exclude == ("A",)
    assert config.output_dir == Path("data/results")


def test_run_config_invalid_override():
    with pytest.raises(ConfigError):
        Settings().run_config(Path("votes.csv"), min_participation=-0.1)


def test_synth_settings_to_configs():
    configs = SynthSettings(mode="blocs", n_legislators=10, n_rollcalls=20, periods=2, seed=3).to_configs()
    assert [c.seed for c in configs] == [3, 4]
    assert [c.year for c in configs] == [2000, 2001]
    assert configs[0].party == ("L",) * 5 + ("R",) * 5
    with pytest.raises(ConfigError):
        SynthSettings(mode="spiral").to_configs()
    with pytest.raises(ConfigError):
        SynthSettings(periods=0).to_configs()
