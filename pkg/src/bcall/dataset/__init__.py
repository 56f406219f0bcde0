"""Roll-call data model, loaders and period slicing."""

from bcall.dataset.loader import VoteLoader, ingest, load_score_table, to_long_frame
from bcall.dataset.periods import PeriodPolicy, filter_low_participation, slice_by_period
from bcall.dataset.schema import Cast, Group, Legislator, PeriodKey, RollCall, VoteMatrix

__all__ = [
    "Cast",
    "Group",
    "Legislator",
    "PeriodKey",
    "RollCall",
    "VoteMatrix",
    "VoteLoader",
    "ingest",
    "load_score_table",
    "to_long_frame",
    "PeriodPolicy",
    "filter_low_participation",
    "slice_by_period",
]
