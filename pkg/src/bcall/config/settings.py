"""Unified configuration management."""

import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import yaml
from dotenv import load_dotenv

from bcall.clustering.labels import GroupSource
from bcall.clustering.polarity import DEFAULT_MAX_REFINE_ITERS
from bcall.dataset.loader import ADAPTERS
from bcall.dataset.periods import DEFAULT_MIN_PARTICIPATION, PeriodPolicy
from bcall.errors import ConfigError
from bcall.evaluation.metrics.unity import UNITY_WEIGHTINGS
from bcall.evaluation.tally import DEFAULT_INDICES
from bcall.runner.pipeline import AGGREGATIONS, RunConfig
from bcall.synth.generator import SynthConfig, yearly_configs


def _known(cls, data: dict, section: str) -> dict:
    names = {f.name for f in fields(cls)}
    unknown = sorted(set(data) - names)
    if unknown:
        raise ConfigError(f"Unknown {section} keys: {', '.join(unknown)}")
    return data


@dataclass
class PipelineConfig:
    """Pipeline configuration."""

    adapter: str = "canonical"
    period: str = "year"
    min_participation: float = DEFAULT_MIN_PARTICIPATION
    groups: str = "cluster"
    anchor_left: str | None = None
    max_refine_iters: int = DEFAULT_MAX_REFINE_ITERS
    aggregate: str = "party"
    parallel: int = 1
    exclude: list[str] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        data = _known(cls, data, "pipeline")
        return cls(
            adapter=data.get("adapter", "canonical"),
            period=str(data.get("period", "year")),
            min_participation=float(data.get("min_participation", DEFAULT_MIN_PARTICIPATION)),
            groups=data.get("groups", "cluster"),
            anchor_left=str(data["anchor_left"]) if data.get("anchor_left") is not None else None,
            max_refine_iters=int(data.get("max_refine_iters", DEFAULT_MAX_REFINE_ITERS)),
            aggregate=data.get("aggregate", "party"),
            parallel=int(data.get("parallel", 1)),
            exclude=[str(v) for v in data.get("exclude") or []],
        )


@dataclass
class IndexConfig:
    """Cohesion index configuration."""

    indices: list[str] = field(default_factory=lambda: list(DEFAULT_INDICES))
    unity_weighting: str = "closeness"

    @classmethod
    def from_dict(cls, data: dict) -> "IndexConfig":
        data = _known(cls, data, "indices")
        return cls(
            indices=list(data.get("indices", DEFAULT_INDICES)),
            unity_weighting=data.get("unity_weighting", "closeness"),
        )


@dataclass
class SynthSettings:
    """Synthetic data configuration."""

    mode: str = "random"
    n_legislators: int = 100
    n_rollcalls: int = 300
    sigma_min: float = 0.1
    sigma_max: float = 0.6
    bloc_theta: float = 0.8
    abstain_prob: float = 0.0
    absent_prob: float = 0.0
    year: int = 2000
    periods: int = 1
    seed: int = 0

    @classmethod
    def from_dict(cls, data: dict) -> "SynthSettings":
        data = _known(cls, data, "synth")
        return cls(
            mode=data.get("mode", "random"),
            n_legislators=int(data.get("n_legislators", 100)),
            n_rollcalls=int(data.get("n_rollcalls", 300)),
            sigma_min=float(data.get("sigma_min", 0.1)),
            sigma_max=float(data.get("sigma_max", 0.6)),
            bloc_theta=float(data.get("bloc_theta", 0.8)),
            abstain_prob=float(data.get("abstain_prob", 0.0)),
            absent_prob=float(data.get("absent_prob", 0.0)),
            year=int(data.get("year", 2000)),
            periods=int(data.get("periods", 1)),
            seed=int(data.get("seed", 0)),
        )

    def to_configs(self) -> list[SynthConfig]:
        """One generator config per period."""
        if self.periods < 1:
            raise ConfigError(f"periods must be >= 1, got {self.periods}")
        common = {
            "abstain_prob": self.abstain_prob,
            "absent_prob": self.absent_prob,
            "year": self.year,
        }
        if self.mode == "blocs":
            cfg = SynthConfig.blocs(
                self.n_legislators // 2,
                self.n_rollcalls,
                theta=self.bloc_theta,
                sigma=self.sigma_min,
                seed=self.seed,
                **common,
            )
        elif self.mode == "random":
            cfg = SynthConfig.random(
                self.n_legislators,
                self.n_rollcalls,
                sigma=(self.sigma_min, self.sigma_max),
                seed=self.seed,
                **common,
            )
        else:
            raise ConfigError(f"Unknown synth mode: {self.mode} (expected random or blocs)")
        return yearly_configs(cfg, self.periods)


@dataclass
class Settings:
    """Global configuration management."""

    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    indices: IndexConfig = field(default_factory=IndexConfig)
    synth: SynthSettings = field(default_factory=SynthSettings)
    output_dir: str = "data/results"
    log_level: str = "INFO"

    @classmethod
    def load(cls, config_path: Path | None = None) -> "Settings":
        """Load configuration.

        Priority: environment variables > specified config file (or the
        configs directory) > defaults. Command-line flags override all of them.
        """
        load_dotenv()

        settings = cls()
        if config_path:
            config_path = Path(config_path)
            if not config_path.exists():
                raise ConfigError(f"Config file not found: {config_path}")
            settings._apply_config(_read_yaml(config_path))
        else:
            settings._load_from_configs_dir()

        settings._load_from_env()
        return settings

    def _load_from_configs_dir(self, configs_dir: Path = Path("configs")):
        """Load configuration from configs directory."""
        if not configs_dir.exists():
            return
        for section in ("pipeline", "evaluation", "synth"):
            path = configs_dir / section / "default.yaml"
            if path.exists():
                self._apply_config(_read_yaml(path))

    def _load_from_env(self):
        """Load from environment variables."""
        self.log_level = os.getenv("BCALL_LOG_LEVEL", self.log_level)
        self.output_dir = os.getenv("BCALL_OUTPUT_DIR", self.output_dir)

    def _apply_config(self, data: dict):
        """Apply configuration data."""
        if "pipeline" in data:
            self.pipeline = PipelineConfig.from_dict(data["pipeline"] or {})
        if "indices" in data:
            self.indices = IndexConfig.from_dict(data["indices"] or {})
        if "synth" in data:
            self.synth = SynthSettings.from_dict(data["synth"] or {})
        if "output_dir" in data:
            self.output_dir = str(data["output_dir"])
        if "log_level" in data:
            self.log_level = str(data["log_level"])

    def validate(self) -> list[str]:
        """Validate configuration, return list of errors."""
        errors = []
        p = self.pipeline
        if p.adapter not in ADAPTERS:
            errors.append(f"Unknown adapter: {p.adapter}")
        for parse, value in ((PeriodPolicy.parse, p.period), (GroupSource.parse, p.groups)):
            try:
                parse(value)
            except ConfigError as e:
                errors.append(str(e))
        if not 0.0 <= p.min_participation <= 1.0:
            errors.append(f"min_participation must lie in [0, 1], got {p.min_participation}")
        if p.max_refine_iters < 0:
            errors.append(f"max_refine_iters must be >= 0, got {p.max_refine_iters}")
        if p.aggregate not in AGGREGATIONS:
            errors.append(f"Unknown aggregation: {p.aggregate}")
        if p.parallel < 1:
            errors.append(f"parallel must be >= 1, got {p.parallel}")
        if self.indices.unity_weighting not in UNITY_WEIGHTINGS:
            errors.append(f"Unknown unity weighting: {self.indices.unity_weighting}")
        try:
            self.synth.to_configs()
        except ConfigError as e:
            errors.append(f"synth: {e}")
        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"Unknown log level: {self.log_level}")
        return errors

    def run_config(self, input: Path, **overrides) -> RunConfig:
        """Build a run configuration; overrides that are None keep the settings value.

        Raises:
            ConfigError: Invalid resulting configuration
        """
        values = {
            **asdict(self.pipeline),
            "indices": tuple(self.indices.indices),
            "unity_weighting": self.indices.unity_weighting,
            "output_dir": self.output_dir,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        values["exclude"] = tuple(values.get("exclude") or ())
        return RunConfig(input=input, **values)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return asdict(self)


def _read_yaml(path: Path) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at the top level")
    return data
