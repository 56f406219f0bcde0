"""Comparison of two per-legislator score files, period by period."""

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd
from scipy import stats

from bcall.dataset.loader import load_score_table
from bcall.evaluation.correlation import MIN_OBSERVATIONS, CorrelationReport, correlation_report

logger = logging.getLogger(__name__)

JOIN_KEY = ["legislator_id", "period"]
REPORT_COLUMNS = ["period", "r", "se", "rho", "rho_se", "n"]
DEFAULT_DISCREPANCY_K = 10


@dataclass
class ComparisonResult:
    """Per-period correlation reports between two score sets."""

    reports: dict[str, CorrelationReport] = field(default_factory=dict)
    discrepancies: pd.DataFrame | None = None

    def to_frame(self) -> pd.DataFrame:
        rows = [{"period": period, **report.to_dict()} for period, report in self.reports.items()]
        return pd.DataFrame(rows, columns=REPORT_COLUMNS)

    def summary_frame(self) -> pd.DataFrame:
        return summarize_reports(self.to_frame())

    def to_dict(self) -> dict:
        summary = self.summary_frame()
        return {
            "periods": {period: report.to_dict() for period, report in self.reports.items()},
            "summary": {
                row["period"]: {c: _none_if_nan(row[c]) for c in REPORT_COLUMNS[1:]}
                for _, row in summary[summary["period"].isin(["M", "SD"])].iterrows()
            },
        }


def _none_if_nan(value):
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return None
    return float(value)


def join_scores(scores_a: pd.DataFrame, scores_b: pd.DataFrame) -> pd.DataFrame:
    """Inner join on (legislator_id, period) into ``score_a`` and ``score_b``."""
    joined = scores_a.rename(columns={"score": "score_a"}).merge(
        scores_b[[*JOIN_KEY, "score"]].rename(columns={"score": "score_b"}),
        on=JOIN_KEY,
        how="inner",
        sort=False,
    )
    return joined.sort_values(JOIN_KEY, kind="stable").reset_index(drop=True)


def compare(
    scores_a: pd.DataFrame,
    scores_b: pd.DataFrame,
    d2: pd.DataFrame | None = None,
    k: int = DEFAULT_DISCREPANCY_K,
) -> ComparisonResult:
    """Correlate two score tables per period.

    Args:
        scores_a: ``legislator_id, period, score`` (usually B-Call d1)
        scores_b: ``legislator_id, period, score`` (e.g. an external ideal point)
        d2: Optional ``legislator_id, period, score`` cohesion table for scores_a
        k: Number of least cohesive legislators flagged per period

    Returns:
        Comparison result; periods with fewer than 3 joined rows or a constant
        score are reported as missing
    """
    joined = join_scores(scores_a, scores_b)
    result = ComparisonResult()
    for period in sorted(set(scores_a["period"]) | set(scores_b["period"])):
        rows = joined[joined["period"] == period]
        if len(rows) < MIN_OBSERVATIONS:
            logger.warning(f"[{period}] only {len(rows)} joined rows, correlation missing")
            result.reports[period] = CorrelationReport.missing(len(rows))
            continue
        result.reports[period] = correlation_report(rows["score_a"], rows["score_b"])

    result.discrepancies = rank_discrepancies(joined, d2, k)
    return result


def compare_files(
    path_a: Path,
    path_b: Path,
    column_a: str | None = None,
    column_b: str | None = None,
    k: int = DEFAULT_DISCREPANCY_K,
) -> ComparisonResult:
    """Load two score files and compare them.

    ``d2`` of the first file, when present, feeds the discrepancy listing.
    """
    scores_a = load_score_table(path_a, column_a)
    scores_b = load_score_table(path_b, column_b)
    header = pd.read_csv(path_a, nrows=0).columns.str.strip()
    d2 = load_score_table(path_a, "d2") if "d2" in header else None
    return compare(scores_a, scores_b, d2=d2, k=k)


def summarize_reports(frame: pd.DataFrame) -> pd.DataFrame:
    """Append mean (M) and sample standard deviation (SD) rows over defined periods."""
    values = frame[REPORT_COLUMNS[1:]].apply(pd.to_numeric, errors="coerce")
    mean = values.mean(skipna=True)
    sd = values.std(skipna=True, ddof=1)
    extra = pd.DataFrame([{"period": "M", **mean.to_dict()}, {"period": "SD", **sd.to_dict()}])
    return pd.concat([frame, extra[REPORT_COLUMNS]], ignore_index=True)


def rank_discrepancies(
    joined: pd.DataFrame,
    d2: pd.DataFrame | None = None,
    k: int = DEFAULT_DISCREPANCY_K,
) -> pd.DataFrame:
    """Rank of every joined legislator under both scores, per period.

    ``rank_shift`` is ``rank_b - rank_a``. The ``k`` legislators with the
    highest d2 in each period are flagged ``least_cohesive``.
    """
    columns = [
        "period", "legislator_id", "score_a", "score_b",
        "rank_a", "rank_b", "rank_shift", "d2", "least_cohesive",
    ]
    if joined.empty:
        return pd.DataFrame(columns=columns)

    frame = joined.copy()
    if d2 is not None:
        frame = frame.merge(d2.rename(columns={"score": "d2"}), on=JOIN_KEY, how="left")
    else:
        frame["d2"] = np.nan

    parts = []
    for _, part in frame.groupby("period", sort=True):
        part = part.copy()
        part["rank_a"] = stats.rankdata(part["score_a"], method="average")
        part["rank_b"] = stats.rankdata(part["score_b"], method="average")
        part["rank_shift"] = part["rank_b"] - part["rank_a"]
        flagged = part["d2"].dropna().sort_values(ascending=False, kind="stable").index[:k]
        part["least_cohesive"] = part.index.isin(flagged)
        parts.append(part)

    return pd.concat(parts, ignore_index=True)[columns]
