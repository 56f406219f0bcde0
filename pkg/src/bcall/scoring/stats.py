"""Per-roll-call statistics and vote standardization."""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

import numpy as np

from bcall.dataset.schema import Group, RollCall
from bcall.errors import DataError


class Orientation(str, Enum):
    """Sign applied to a roll call's deviations."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    DROPPED = "dropped"


@dataclass(frozen=True)
class RollCallStats:
    """Mean, population std and group means of one roll call."""

    rollcall_id: str
    mean: float | None
    stddev: float | None
    left_mean: float | None
    right_mean: float | None
    orientation: Orientation
    n_participants: int = 0

    @property
    def dropped(self) -> bool:
        return self.orientation is Orientation.DROPPED

    @property
    def tied(self) -> bool:
        """Group means equal; the positive branch was taken."""
        return not self.dropped and self.left_mean == self.right_mean

    @property
    def sign(self) -> float:
        if self.dropped:
            raise ValueError(f"Roll call {self.rollcall_id} was dropped and has no orientation")
        return 1.0 if self.orientation is Orientation.POSITIVE else -1.0


def column_stats(
    rollcall_id: str,
    values: np.ndarray,
    left_mask: np.ndarray,
    right_mask: np.ndarray,
) -> RollCallStats:
    """Statistics of one roll call from aligned value and group arrays.

    Args:
        rollcall_id: Roll call id
        values: Numeric casts, NaN for ABSENT
        left_mask: True where the legislator is LEFT
        right_mask: True where the legislator is RIGHT

    Returns:
        Roll call statistics
    """
    present = ~np.isnan(values)
    n = int(present.sum())
    if n == 0:
        return RollCallStats(rollcall_id, None, None, None, None, Orientation.DROPPED, 0)

    cast = values[present]
    mean = float(np.mean(cast))
    stddev = float(np.std(cast))

    left = left_mask & present
    right = right_mask & present
    left_mean = float(np.mean(values[left])) if left.any() else None
    right_mean = float(np.mean(values[right])) if right.any() else None

    if stddev == 0.0 or left_mean is None or right_mean is None:
        orientation = Orientation.DROPPED
    elif left_mean <= right_mean:
        orientation = Orientation.POSITIVE
    else:
        orientation = Orientation.NEGATIVE

    return RollCallStats(rollcall_id, mean, stddev, left_mean, right_mean, orientation, n)


def rollcall_stats(rc: RollCall, groups: Mapping[str, Group]) -> RollCallStats:
    """Statistics of a single roll call.

    Every legislator with a non-ABSENT cast must be assigned a group.
    """
    ids = [lid for lid, cast in rc.casts.items() if cast.numeric is not None]
    missing = [lid for lid in ids if lid not in groups]
    if missing:
        raise DataError(
            f"Roll call {rc.id}: no LEFT/RIGHT group for {', '.join(missing[:5])}"
        )

    values = np.array([rc.casts[lid].numeric for lid in ids], dtype=float)
    left = np.array([groups[lid] is Group.LEFT for lid in ids], dtype=bool)
    right = np.array([groups[lid] is Group.RIGHT for lid in ids], dtype=bool)
    return column_stats(rc.id, values, left, right)


def deviation(v: float, stats: RollCallStats) -> float:
    """Oriented standardized deviation u of a numeric cast.

    Raises:
        ValueError: The roll call was dropped
    """
    if stats.dropped:
        raise ValueError(f"deviation() called on dropped roll call {stats.rollcall_id}")
    return stats.sign * (v - stats.mean) / stats.stddev
