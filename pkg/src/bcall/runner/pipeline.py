"""End-to-end pipeline: ingest, slice, filter, group, score, index, compare."""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path

from bcall.clustering.labels import GroupResolution, GroupResolver, GroupSource
from bcall.clustering.polarity import DEFAULT_MAX_REFINE_ITERS
from bcall.dataset.loader import ADAPTERS, ingest
from bcall.dataset.periods import (
    DEFAULT_MIN_PARTICIPATION,
    PeriodPolicy,
    filter_low_participation,
    slice_by_period,
)
from bcall.dataset.schema import PeriodKey, VoteMatrix
from bcall.errors import ConfigError, DataError
from bcall.evaluation.base import GroupIndexSeries
from bcall.evaluation.correlation import CorrelationReport, cohesion_comparison
from bcall.evaluation.metrics.unity import UNITY_WEIGHTINGS
from bcall.evaluation.tally import DEFAULT_INDICES, group_index_series
from bcall.scoring.engine import BCallScore, ScoreBatch, bcall_scores

logger = logging.getLogger(__name__)

AGGREGATIONS = ("party", "bloc")
POOLED_SCOPE = "all"


@dataclass
class RunConfig:
    """Run configuration."""

    input: Path
    adapter: str = "canonical"
    members: Path | None = None
    rollcalls: Path | None = None
    period: str = "year"
    min_participation: float = DEFAULT_MIN_PARTICIPATION
    groups: str = "cluster"
    anchor_left: str | None = None
    max_refine_iters: int = DEFAULT_MAX_REFINE_ITERS
    aggregate: str = "party"
    indices: tuple[str, ...] = DEFAULT_INDICES
    unity_weighting: str = "closeness"
    exclude: tuple[str, ...] = ()
    parallel: int = 1
    output_dir: Path = Path("data/results")
    seed: int | None = None

    def __post_init__(self):
        self.input = Path(self.input)
        self.output_dir = Path(self.output_dir)
        self.members = Path(self.members) if self.members else None
        self.rollcalls = Path(self.rollcalls) if self.rollcalls else None
        self.indices = tuple(self.indices)
        self.exclude = tuple(self.exclude)
        # Fails before any data is read.
        self.policy = PeriodPolicy.parse(self.period)
        self.source = GroupSource.parse(self.groups)
        errors = self.validate()
        if errors:
            raise ConfigError("; ".join(errors))

    def validate(self) -> list[str]:
        errors = []
        if self.adapter not in ADAPTERS:
            errors.append(f"Unknown adapter: {self.adapter} (expected one of {', '.join(ADAPTERS)})")
        if not 0.0 <= self.min_participation <= 1.0:
            errors.append(f"min_participation must lie in [0, 1], got {self.min_participation}")
        if self.max_refine_iters < 0:
            errors.append(f"max_refine_iters must be >= 0, got {self.max_refine_iters}")
        if self.aggregate not in AGGREGATIONS:
            errors.append(f"Unknown aggregation: {self.aggregate} (expected party or bloc)")
        if self.unity_weighting not in UNITY_WEIGHTINGS:
            errors.append(f"Unknown unity weighting: {self.unity_weighting}")
        if self.parallel < 1:
            errors.append(f"parallel must be >= 1, got {self.parallel}")
        return errors

    def to_dict(self) -> dict:
        """Configuration echo for the manifest; the output directory is left out."""
        return {
            "input": str(self.input),
            "adapter": self.adapter,
            "members": str(self.members) if self.members else None,
            "rollcalls": str(self.rollcalls) if self.rollcalls else None,
            "period": self.policy.describe(),
            "min_participation": self.min_participation,
            "groups": self.source.describe(),
            "anchor_left": self.anchor_left,
            "max_refine_iters": self.max_refine_iters,
            "aggregate": self.aggregate,
            "indices": list(self.indices),
            "unity_weighting": self.unity_weighting,
            "exclude": list(self.exclude),
            "seed": self.seed,
        }


@dataclass
class PeriodResult:
    """Everything computed for one period slice."""

    period: PeriodKey
    n_legislators: int = 0
    n_rollcalls: int = 0
    removed: int = 0
    batch: ScoreBatch | None = None
    resolution: GroupResolution | None = None
    indices: list[GroupIndexSeries] = field(default_factory=list)
    group_of: dict[str, str] = field(default_factory=dict)
    names: dict[str, str] = field(default_factory=dict)
    parties: dict[str, str | None] = field(default_factory=dict)
    skipped: str | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def scores(self) -> list[BCallScore]:
        return list(self.batch.scores) if self.batch else []


@dataclass
class CohesionRow:
    """One row of the cohesion comparison table."""

    scope: str
    metric: str
    report: CorrelationReport

    def to_dict(self) -> dict:
        return {"scope": self.scope, "metric": self.metric, **self.report.to_dict()}


@dataclass
class PipelineResult:
    """Results of a full run, periods in period order."""

    config: RunConfig
    n_legislators: int
    n_rollcalls: int
    excluded: list[str] = field(default_factory=list)
    periods: list[PeriodResult] = field(default_factory=list)
    cohesion: list[CohesionRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def scores(self) -> list[BCallScore]:
        return [s for p in self.periods for s in p.scores]

    @property
    def indices(self) -> list[GroupIndexSeries]:
        return [s for p in self.periods for s in p.indices]


class PipelineRunner:
    """Runs the scoring pipeline over every period of a vote matrix.

    Periods are independent and run on a thread pool when ``parallel > 1``;
    results are always reassembled in period order.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.resolver = GroupResolver(
            source=config.source,
            anchor=config.anchor_left,
            max_refine_iters=config.max_refine_iters,
        )

    def load(self) -> VoteMatrix:
        cfg = self.config
        return ingest(cfg.input, cfg.adapter, members_path=cfg.members, rollcalls_path=cfg.rollcalls)

    def run(
        self,
        matrix: VoteMatrix | None = None,
        progress_callback: Callable[[str, str, int, int], None] | None = None,
    ) -> PipelineResult:
        """Run the pipeline.

        Args:
            matrix: Already loaded votes; read from ``config.input`` when omitted
            progress_callback: Optional callback for progress reporting.
                Signature: (event, period, current, total)

        Returns:
            Pipeline result
        """
        if matrix is None:
            matrix = self.load()

        result = PipelineResult(
            config=self.config,
            n_legislators=len(matrix.legislators),
            n_rollcalls=len(matrix.rollcalls),
        )

        if self.config.exclude:
            known = set(matrix.legislator_ids)
            for lid in self.config.exclude:
                if lid not in known:
                    self._warn(result.warnings, f"Excluded legislator {lid} not in the data")
            result.excluded = [lid for lid in self.config.exclude if lid in known]
            matrix = matrix.without(result.excluded)

        slices = slice_by_period(matrix, self.config.policy)
        logger.info(f"Processing {len(slices)} periods ({self.config.policy.describe()})")
        if progress_callback:
            progress_callback("start", "", 0, len(slices))

        if self.config.parallel > 1:
            result.periods = self._run_parallel(slices, progress_callback)
        else:
            result.periods = []
            for i, (key, sub) in enumerate(slices):
                result.periods.append(self.run_period(key, sub))
                if progress_callback:
                    progress_callback("period_complete", str(key), i + 1, len(slices))

        for period in result.periods:
            result.warnings.extend(period.warnings)
        result.cohesion = self.compare_cohesion(result)
        return result

    def _run_parallel(
        self,
        slices: list[tuple[PeriodKey, VoteMatrix]],
        progress_callback=None,
    ) -> list[PeriodResult]:
        results: dict[int, PeriodResult] = {}
        with ThreadPoolExecutor(max_workers=self.config.parallel) as executor:
            futures = {
                executor.submit(self.run_period, key, sub): i
                for i, (key, sub) in enumerate(slices)
            }
            for future in as_completed(futures):
                i = futures[future]
                results[i] = future.result()
                if progress_callback:
                    progress_callback("period_complete", str(slices[i][0]), len(results), len(slices))
        return [results[i] for i in range(len(slices))]

    def run_period(self, key: PeriodKey, sub: VoteMatrix) -> PeriodResult:
        """Filter, group, score and index one period slice.

        Raises:
            DataError: Carrying the period label
        """
        try:
            return self._run_period(key, sub)
        except DataError as e:
            raise e.with_period(str(key)) from e

    def _run_period(self, key: PeriodKey, sub: VoteMatrix) -> PeriodResult:
        cfg = self.config
        period = PeriodResult(period=key)

        filtered = filter_low_participation(sub, cfg.min_participation)
        period.removed = len(sub.legislators) - len(filtered.legislators)
        period.n_legislators = len(filtered.legislators)
        period.n_rollcalls = len(filtered.rollcalls)
        if period.removed:
            logger.info(f"[{key}] removed {period.removed} low-participation legislators")

        if period.n_rollcalls == 0 or period.n_legislators < 2:
            period.skipped = "empty period"
            self._warn(
                period.warnings,
                f"[{key}] skipped: {period.n_legislators} legislators, {period.n_rollcalls} roll calls",
            )
            return period

        period.resolution = self.resolver.resolve(filtered, key)
        period.warnings.extend(period.resolution.warnings)
        groups = period.resolution.groups

        period.batch = bcall_scores(filtered, groups, key)
        if period.batch.retained == 0:
            self._warn(period.warnings, f"[{key}] every roll call dropped, no scores")

        period.names = {leg.id: leg.name for leg in filtered.legislators}
        period.parties = {leg.id: leg.party for leg in filtered.legislators}
        if cfg.aggregate == "bloc":
            period.group_of = {lid: g.value for lid, g in groups.items()}
        else:
            period.group_of = {lid: p for lid, p in period.parties.items() if p}
            if not period.group_of:
                self._warn(period.warnings, f"[{key}] no party labels, party indices empty")

        period.indices = group_index_series(
            filtered, period.group_of, key, cfg.indices, cfg.unity_weighting
        )
        return period

    def compare_cohesion(self, result: PipelineResult) -> list[CohesionRow]:
        """Mean d2 against RICE and UNITY, per group across periods and pooled."""
        scores = result.scores
        indices = result.indices
        group_of = None
        if self.config.aggregate == "party":
            group_of = {}
            for period in result.periods:
                group_of.update(period.group_of)

        rows = []
        scopes = [(g, [s for s in indices if s.group == g]) for g in sorted({s.group for s in indices})]
        scopes.append((POOLED_SCOPE, indices))
        for scope, cells in scopes:
            try:
                comparison = cohesion_comparison(scores, cells, group_of)
            except DataError as e:
                self._warn(result.warnings, f"cohesion comparison for {scope}: {e}")
                missing = CorrelationReport.missing(len(cells))
                rows.extend(CohesionRow(scope, metric, missing) for metric in ("rice", "unity"))
                continue
            rows.extend(CohesionRow(scope, metric, report) for metric, report in comparison.items())
        return rows

    @staticmethod
    def _warn(sink: list[str], message: str):
        logger.warning(message)
        sink.append(message)


def run_pipeline(config: RunConfig, progress_callback=None) -> PipelineResult:
    """Run the pipeline and write every artifact to ``config.output_dir``."""
    from bcall.reporting.writer import ArtifactWriter

    result = PipelineRunner(config).run(progress_callback=progress_callback)
    ArtifactWriter(config.output_dir).write_run(result)
    return result
