"""Pearson and Spearman correlations with standard errors, and the
comparison of mean cohesion scores against RICE and UNITY.
"""

import logging
import math
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np
from scipy import stats

from bcall.evaluation.base import GroupIndexSeries
from bcall.errors import DataError
from bcall.scoring.engine import BCallScore

logger = logging.getLogger(__name__)

MIN_OBSERVATIONS = 3
# |r| this close to 1 is a perfect linear relation lost to rounding.
PERFECT_TOLERANCE = 1e-12


def _as_pair(x: Sequence[float], y: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"Length mismatch: {x.shape} vs {y.shape}")
    if x.size < MIN_OBSERVATIONS:
        raise ValueError(f"Need at least {MIN_OBSERVATIONS} observations, got {x.size}")
    return x, y


def _constant(v: np.ndarray) -> bool:
    return bool(np.all(v == v[0]))


def standard_error(r: float, n: int) -> float:
    """sqrt((1 - r^2) / (n - 2))."""
    if n < MIN_OBSERVATIONS:
        raise ValueError(f"Need at least {MIN_OBSERVATIONS} observations, got {n}")
    return math.sqrt(max(0.0, 1.0 - r * r) / (n - 2))


def pearson(x: Sequence[float], y: Sequence[float]) -> tuple[float | None, float | None]:
    """Pearson r and its standard error.

    Returns:
        (r, se), or (None, None) when either vector is constant

    Raises:
        ValueError: Length mismatch or fewer than 3 observations
    """
    x, y = _as_pair(x, y)
    if _constant(x) or _constant(y):
        return None, None
    r, _ = stats.pearsonr(x, y)
    r = float(np.clip(r, -1.0, 1.0))
    if 1.0 - abs(r) < PERFECT_TOLERANCE:
        r = math.copysign(1.0, r)
    return r, standard_error(r, x.size)


def spearman(x: Sequence[float], y: Sequence[float]) -> tuple[float | None, float | None]:
    """Spearman rho (Pearson of average ranks) and its standard error."""
    x, y = _as_pair(x, y)
    return pearson(stats.rankdata(x, method="average"), stats.rankdata(y, method="average"))


@dataclass(frozen=True)
class CorrelationReport:
    """Pearson and Spearman correlation of paired observations."""

    pearson_r: float | None
    pearson_se: float | None
    spearman_rho: float | None
    spearman_se: float | None
    n: int

    @property
    def defined(self) -> bool:
        return self.pearson_r is not None

    def to_dict(self) -> dict:
        return {
            "r": self.pearson_r,
            "se": self.pearson_se,
            "rho": self.spearman_rho,
            "rho_se": self.spearman_se,
            "n": self.n,
        }

    @classmethod
    def missing(cls, n: int = 0) -> "CorrelationReport":
        return cls(None, None, None, None, n)


def correlation_report(x: Sequence[float], y: Sequence[float]) -> CorrelationReport:
    """Both correlations of a paired sample."""
    r, se = pearson(x, y)
    rho, rho_se = spearman(x, y)
    return CorrelationReport(r, se, rho, rho_se, len(x))


@dataclass(frozen=True)
class CohesionComparison:
    """Mean d2 per (group, period) cell against RICE and UNITY."""

    rice: CorrelationReport
    unity: CorrelationReport
    cells: int

    def items(self) -> list[tuple[str, CorrelationReport]]:
        return [("rice", self.rice), ("unity", self.unity)]


def mean_d2_cells(
    scores: Iterable[BCallScore],
    group_of: Mapping[str, str] | None = None,
) -> dict[tuple[str, str], float]:
    """Mean d2 per (group key, period label).

    Args:
        scores: Scores of any number of periods
        group_of: Group key per legislator; defaults to each score's LEFT/RIGHT label
    """
    sums: dict[tuple[str, str], list[float]] = defaultdict(list)
    for score in scores:
        if group_of is not None:
            key = group_of.get(score.legislator_id)
        else:
            key = score.group.value if score.group is not None else None
        if key is None:
            continue
        sums[(key, str(score.period))].append(score.d2)
    return {cell: float(np.mean(values)) for cell, values in sums.items()}


def cohesion_comparison(
    scores: Iterable[BCallScore],
    indices: Iterable[GroupIndexSeries],
    group_of: Mapping[str, str] | None = None,
) -> CohesionComparison:
    """Correlate mean d2 with RICE and UNITY across aggregation cells.

    Raises:
        DataError: Fewer than 3 matching (group, period) cells
    """
    d2 = mean_d2_cells(scores, group_of)
    matched = [
        (d2[(s.group, str(s.period))], s)
        for s in sorted(indices, key=lambda s: (s.group, s.period))
        if (s.group, str(s.period)) in d2
    ]
    if len(matched) < MIN_OBSERVATIONS:
        raise DataError(f"insufficient aggregation cells: {len(matched)} < {MIN_OBSERVATIONS}")

    reports = {}
    for metric in ("rice", "unity"):
        pairs = [(m, getattr(s, metric)) for m, s in matched if getattr(s, metric) is not None]
        if len(pairs) < MIN_OBSERVATIONS:
            reports[metric] = CorrelationReport.missing(len(pairs))
            continue
        x, y = zip(*pairs, strict=True)
        reports[metric] = correlation_report(x, y)

    return CohesionComparison(rice=reports["rice"], unity=reports["unity"], cells=len(matched))
