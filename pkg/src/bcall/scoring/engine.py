"""B-Call dimensions: ideology (d1) and cohesion (d2)."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from bcall.dataset.schema import Group, PeriodKey, VoteMatrix
from bcall.errors import DataError
from bcall.scoring.stats import RollCallStats, column_stats

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeviationSeries:
    """A legislator's u values over retained roll calls they voted on."""

    legislator_id: str
    values: tuple[float, ...]


@dataclass(frozen=True)
class BCallScore:
    """Both dimensions for one legislator in one period."""

    legislator_id: str
    period: PeriodKey
    d1: float
    d2: float
    n_votes: int
    group: Group | None = None


@dataclass
class ScoreBatch:
    """Scores of one period plus the roll-call diagnostics behind them."""

    period: PeriodKey
    scores: list[BCallScore] = field(default_factory=list)
    stats: list[RollCallStats] = field(default_factory=list)

    @property
    def dropped(self) -> int:
        return sum(1 for s in self.stats if s.dropped)

    @property
    def retained(self) -> int:
        return len(self.stats) - self.dropped

    @property
    def tied(self) -> int:
        return sum(1 for s in self.stats if s.tied)

    def __iter__(self):
        return iter(self.scores)

    def __len__(self) -> int:
        return len(self.scores)


def group_masks(m: VoteMatrix, groups: Mapping[str, Group]) -> tuple[np.ndarray, np.ndarray]:
    """LEFT and RIGHT row masks for a matrix.

    Raises:
        DataError: A legislator with a numeric cast has no group
    """
    participating = m.participation() > 0
    missing = [
        leg.id
        for leg, active in zip(m.legislators, participating, strict=True)
        if active and leg.id not in groups
    ]
    if missing:
        raise DataError(f"No LEFT/RIGHT group for legislators: {', '.join(missing[:10])}")

    left = np.array([groups.get(i) is Group.LEFT for i in m.legislator_ids], dtype=bool)
    right = np.array([groups.get(i) is Group.RIGHT for i in m.legislator_ids], dtype=bool)
    return left, right


def matrix_stats(m: VoteMatrix, groups: Mapping[str, Group]) -> list[RollCallStats]:
    """Statistics of every roll call, in matrix order."""
    left, right = group_masks(m, groups)
    values = m.values
    return [
        column_stats(rc.id, values[:, j], left, right) for j, rc in enumerate(m.rollcalls)
    ]


def deviation_matrix(m: VoteMatrix, stats: list[RollCallStats]) -> np.ndarray:
    """All u values, NaN where ABSENT or the roll call was dropped."""
    values = m.values
    u = np.full(values.shape, np.nan)
    for j, s in enumerate(stats):
        if s.dropped:
            continue
        u[:, j] = s.sign * (values[:, j] - s.mean) / s.stddev
    return u


def deviation_series(m: VoteMatrix, stats: list[RollCallStats], legislator_id: str) -> DeviationSeries:
    row = deviation_matrix(m, stats)[m.index[legislator_id]]
    return DeviationSeries(legislator_id, tuple(float(v) for v in row[~np.isnan(row)]))


def summarize_deviations(values: np.ndarray) -> tuple[float, float]:
    """Mean (d1) and population standard deviation (d2) of a u series."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("Cannot summarize an empty deviation series")
    if np.all(values == values[0]):
        return float(values[0]), 0.0
    return float(np.mean(values)), float(np.std(values))


def bcall_scores(
    m: VoteMatrix,
    groups: Mapping[str, Group],
    period: PeriodKey,
) -> ScoreBatch:
    """Compute d1 and d2 for every legislator with at least one retained vote.

    Args:
        m: Vote matrix of one period
        groups: LEFT/RIGHT label per legislator
        period: Period key stamped on each score

    Returns:
        Score batch; ``scores`` follows input legislator order
    """
    stats = matrix_stats(m, groups)
    batch = ScoreBatch(period=period, stats=stats)
    if batch.retained == 0:
        logger.warning(f"[{period}] all {len(stats)} roll calls dropped, no scores")
        return batch
    if batch.tied:
        logger.info(f"[{period}] {batch.tied} roll calls with tied group means")

    u = deviation_matrix(m, stats)
    for i, leg in enumerate(m.legislators):
        row = u[i]
        row = row[~np.isnan(row)]
        if row.size == 0:
            continue
        d1, d2 = summarize_deviations(row)
        batch.scores.append(BCallScore(
            legislator_id=leg.id,
            period=period,
            d1=d1,
            d2=d2,
            n_votes=int(row.size),
            group=groups.get(leg.id),
        ))

    logger.debug(
        f"[{period}] scored {len(batch.scores)} legislators over "
        f"{batch.retained} roll calls ({batch.dropped} dropped)"
    )
    return batch
