"""Cohesion index base classes."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass, field

from bcall.dataset.schema import PeriodKey


@dataclass(frozen=True)
class GroupVoteTally:
    """Yea/nay/abstain counts of one group on one roll call."""

    group: str
    rollcall_id: str
    yea: int = 0
    nay: int = 0
    abstain: int = 0

    def __post_init__(self):
        if min(self.yea, self.nay, self.abstain) < 0:
            raise ValueError(f"Negative tally for {self.group} on {self.rollcall_id}")

    @property
    def decisive(self) -> int:
        """Yea plus nay; abstentions never count toward cohesion."""
        return self.yea + self.nay

    @property
    def participants(self) -> int:
        return self.yea + self.nay + self.abstain


@dataclass
class GroupIndexSeries:
    """Cohesion indices of one group in one period."""

    group: str
    period: PeriodKey
    rice: float | None
    unity: float | None
    n_rollcalls: int
    unity_weighting: str = "closeness"
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "period": str(self.period),
            "n_rollcalls": self.n_rollcalls,
            "rice": self.rice,
            "unity": self.unity,
            "unity_weighting": self.unity_weighting,
            **self.extra,
        }


class CohesionIndex(ABC):
    """Base class for group cohesion indices.

    Every index maps one group's tallies over a period to a value in [0, 1],
    or ``None`` when the index is undefined for that period.
    """

    name: str = "base"
    description: str = "Base cohesion index"

    def __init__(self, config: dict | None = None):
        self.config = config or {}

    @abstractmethod
    def compute(
        self,
        tallies: Sequence[GroupVoteTally],
        chamber: Sequence[GroupVoteTally] | None = None,
    ) -> float | None:
        """Compute the index.

        Args:
            tallies: One group's tallies, one per roll call
            chamber: Chamber-wide tallies of the same roll calls

        Returns:
            Index value, or None if undefined
        """
        pass
