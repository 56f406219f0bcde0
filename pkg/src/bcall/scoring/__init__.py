"""Roll-call statistics and B-Call scoring."""

from bcall.scoring.engine import (
    BCallScore,
    DeviationSeries,
    ScoreBatch,
    bcall_scores,
    deviation_matrix,
    deviation_series,
    matrix_stats,
    summarize_deviations,
)
from bcall.scoring.stats import Orientation, RollCallStats, deviation, rollcall_stats

__all__ = [
    "BCallScore",
    "DeviationSeries",
    "ScoreBatch",
    "bcall_scores",
    "deviation_matrix",
    "deviation_series",
    "matrix_stats",
    "summarize_deviations",
    "Orientation",
    "RollCallStats",
    "deviation",
    "rollcall_stats",
]
