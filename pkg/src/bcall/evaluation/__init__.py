"""Cohesion indices and correlation statistics."""

from bcall.evaluation.aggregator import (
    ComparisonResult,
    compare,
    compare_files,
    rank_discrepancies,
    summarize_reports,
)
from bcall.evaluation.base import CohesionIndex, GroupIndexSeries, GroupVoteTally
from bcall.evaluation.correlation import (
    CohesionComparison,
    CorrelationReport,
    cohesion_comparison,
    correlation_report,
    pearson,
    spearman,
    standard_error,
)
from bcall.evaluation.metrics import rice_index, unity_index
from bcall.evaluation.registry import IndexRegistry, register_index
from bcall.evaluation.tally import chamber_tallies, group_index_series, group_tallies

__all__ = [
    "ComparisonResult",
    "compare",
    "compare_files",
    "rank_discrepancies",
    "summarize_reports",
    "CohesionIndex",
    "GroupIndexSeries",
    "GroupVoteTally",
    "CohesionComparison",
    "CorrelationReport",
    "cohesion_comparison",
    "correlation_report",
    "pearson",
    "spearman",
    "standard_error",
    "rice_index",
    "unity_index",
    "IndexRegistry",
    "register_index",
    "chamber_tallies",
    "group_index_series",
    "group_tallies",
]
