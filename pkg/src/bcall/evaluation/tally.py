"""Group and chamber vote tallies, and the index series built from them."""

import logging
from collections.abc import Mapping, Sequence

import numpy as np

from bcall.dataset.schema import PeriodKey, VoteMatrix
from bcall.evaluation.base import GroupIndexSeries, GroupVoteTally
from bcall.evaluation.registry import IndexRegistry
from bcall.errors import ConfigError

logger = logging.getLogger(__name__)

CHAMBER = "chamber"
DEFAULT_INDICES = ("rice", "unity")


def _tally_rows(m: VoteMatrix, rows: np.ndarray, group: str) -> list[GroupVoteTally]:
    values = m.values[rows]
    yea = np.sum(values == 1.0, axis=0)
    nay = np.sum(values == -1.0, axis=0)
    abstain = np.sum(values == 0.0, axis=0)
    return [
        GroupVoteTally(group, rc.id, int(yea[j]), int(nay[j]), int(abstain[j]))
        for j, rc in enumerate(m.rollcalls)
    ]


def group_tallies(m: VoteMatrix, group_of: Mapping[str, str]) -> dict[str, list[GroupVoteTally]]:
    """Tallies per group key, one per roll call, groups in sorted order.

    Legislators without a key are left out of every group.
    """
    keys = [group_of.get(lid) for lid in m.legislator_ids]
    tallies = {}
    for group in sorted({k for k in keys if k is not None}):
        rows = np.array([k == group for k in keys], dtype=bool)
        tallies[group] = _tally_rows(m, rows, group)
    return tallies


def chamber_tallies(m: VoteMatrix) -> list[GroupVoteTally]:
    """Tallies of the whole chamber."""
    return _tally_rows(m, np.ones(len(m.legislators), dtype=bool), CHAMBER)


def group_index_series(
    m: VoteMatrix,
    group_of: Mapping[str, str],
    period: PeriodKey,
    indices: Sequence[str] = DEFAULT_INDICES,
    unity_weighting: str = "closeness",
) -> list[GroupIndexSeries]:
    """Cohesion indices of every group in one period.

    Args:
        m: Vote matrix of the period
        group_of: Group key (party or LEFT/RIGHT bloc) per legislator
        period: Period key
        indices: Registered index names to compute
        unity_weighting: Weighting used by the unity index

    Returns:
        One series entry per group, sorted by group key
    """
    config = {"unity_weighting": unity_weighting}
    calculators = {}
    for name in indices:
        index = IndexRegistry.get(name, config=config)
        if index is None:
            raise ConfigError(
                f"Unknown cohesion index: {name} (available: {', '.join(IndexRegistry.list_names())})"
            )
        calculators[name] = index

    chamber = chamber_tallies(m)
    series = []
    for group, tallies in group_tallies(m, group_of).items():
        values = {name: index.compute(tallies, chamber) for name, index in calculators.items()}
        series.append(GroupIndexSeries(
            group=group,
            period=period,
            rice=values.pop("rice", None),
            unity=values.pop("unity", None),
            n_rollcalls=sum(1 for t in tallies if t.decisive > 0),
            unity_weighting=unity_weighting,
            extra=values,
        ))
        logger.debug(f"[{period}] {group}: {series[-1].to_dict()}")
    return series
