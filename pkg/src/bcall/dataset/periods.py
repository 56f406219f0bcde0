"""Participation filtering and period slicing."""

from __future__ import annotations

import datetime as dt
import logging
from dataclasses import dataclass

import numpy as np

from bcall.dataset.schema import PeriodKey, VoteMatrix
from bcall.errors import ConfigError, DataError

logger = logging.getLogger(__name__)

DEFAULT_MIN_PARTICIPATION = 0.10

# Absorbs float error in threshold * n so exact-boundary legislators are kept.
_BOUNDARY_EPS = 1e-9


def filter_low_participation(m: VoteMatrix, threshold: float = DEFAULT_MIN_PARTICIPATION) -> VoteMatrix:
    """Keep legislators whose non-ABSENT casts reach threshold x roll calls.

    Participation exactly at the threshold is retained. Roll calls are
    unchanged; casts of removed legislators are dropped.

    Args:
        m: Vote matrix
        threshold: Minimum participation fraction in [0, 1]

    Returns:
        Filtered matrix
    """
    if not 0.0 <= threshold <= 1.0:
        raise ConfigError(f"Participation threshold must be in [0, 1], got {threshold}")

    required = threshold * len(m.rollcalls)
    counts = m.participation()
    keep = [
        leg.id
        for leg, count in zip(m.legislators, counts, strict=True)
        if count >= required - _BOUNDARY_EPS
    ]
    if len(keep) == len(m.legislators):
        return m

    logger.debug(f"Participation filter removed {len(m.legislators) - len(keep)} legislators")
    return m.subset(legislator_ids=keep)


@dataclass(frozen=True)
class PeriodRange:
    """Inclusive date range with a label."""

    label: str
    start: dt.date
    end: dt.date

    def contains(self, date: dt.date) -> bool:
        return self.start <= date <= self.end


@dataclass(frozen=True)
class PeriodPolicy:
    """How roll calls are assigned to periods.

    ``kind`` is "year" (calendar years) or "ranges" (explicit ranges).
    """

    kind: str = "year"
    ranges: tuple[PeriodRange, ...] = ()

    @classmethod
    def parse(cls, spec: str) -> PeriodPolicy:
        """Parse "year" or "ranges=[LABEL:]START..END,...".

        Dates are ISO YYYY-MM-DD; the default label is "YYYY" when both
        ends share a year and "YYYY-YYYY" otherwise.
        """
        spec = (spec or "").strip()
        if spec in ("year", "calendar-year"):
            return cls(kind="year")
        if not spec.startswith("ranges="):
            raise ConfigError(f"Unknown period policy: {spec!r} (expected 'year' or 'ranges=...')")

        ranges = []
        for item in spec[len("ranges="):].split(","):
            item = item.strip()
            if not item:
                continue
            label = None
            if ":" in item:
                label, item = item.split(":", 1)
                label = label.strip()
            try:
                start_s, end_s = item.split("..")
                start = dt.date.fromisoformat(start_s.strip())
                end = dt.date.fromisoformat(end_s.strip())
            except ValueError:
                raise ConfigError(f"Invalid period range: {item!r}") from None
            if end < start:
                raise ConfigError(f"Period range ends before it starts: {item!r}")
            if not label:
                label = str(start.year) if start.year == end.year else f"{start.year}-{end.year}"
            ranges.append(PeriodRange(label=label, start=start, end=end))

        if not ranges:
            raise ConfigError("Period policy 'ranges=' lists no ranges")

        ranges.sort(key=lambda r: r.start)
        for prev, cur in zip(ranges, ranges[1:], strict=False):
            if cur.start <= prev.end:
                raise ConfigError(f"Period ranges overlap: {prev.label} and {cur.label}")
        labels = [r.label for r in ranges]
        if len(set(labels)) != len(labels):
            raise ConfigError("Period range labels must be unique")

        return cls(kind="ranges", ranges=tuple(ranges))

    def key_for(self, date: dt.date) -> PeriodKey | None:
        """Period of a date, or None when no explicit range covers it."""
        if self.kind == "year":
            return PeriodKey(str(date.year))
        for r in self.ranges:
            if r.contains(date):
                return PeriodKey(r.label)
        return None

    def describe(self) -> str:
        if self.kind == "year":
            return "year"
        return "ranges=" + ",".join(
            f"{r.label}:{r.start.isoformat()}..{r.end.isoformat()}" for r in self.ranges
        )


def slice_by_period(m: VoteMatrix, policy: PeriodPolicy) -> list[tuple[PeriodKey, VoteMatrix]]:
    """Partition roll calls by period.

    Each slice keeps the legislators with at least one non-ABSENT cast in
    the period. Slices come back in chronological order; under explicit
    ranges every range yields a slice, empty ones included.

    Raises:
        DataError: A roll call has no date, or falls outside every range
    """
    assigned: dict[PeriodKey, list[str]] = {}
    if policy.kind == "ranges":
        for r in policy.ranges:
            assigned[PeriodKey(r.label)] = []

    for rc in m.rollcalls:
        if rc.date is None:
            raise DataError(f"Roll call {rc.id} has no parseable date")
        key = policy.key_for(rc.date)
        if key is None:
            raise DataError(f"Roll call {rc.id} dated {rc.date.isoformat()} is outside every period range")
        assigned.setdefault(key, []).append(rc.id)

    if policy.kind == "year":
        keys = sorted(assigned, key=lambda k: int(k.label))
    else:
        keys = list(assigned)

    slices = []
    for key in keys:
        period_matrix = m.subset(rollcall_ids=assigned[key])
        active = np.sum(~np.isnan(period_matrix.values), axis=1) > 0
        present = [leg.id for leg, on in zip(period_matrix.legislators, active, strict=True) if on]
        if len(present) != len(period_matrix.legislators):
            period_matrix = period_matrix.subset(legislator_ids=present)
        slices.append((key, period_matrix))

    return slices
