"""Roll-call data model."""

from __future__ import annotations

import datetime as dt
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from bcall.errors import DataError


class Cast(Enum):
    """A legislator's recorded position on one roll call."""

    YEA = "yea"
    NAY = "nay"
    ABSTAIN = "abstain"
    ABSENT = "absent"

    @property
    def numeric(self) -> float | None:
        """Vote value in {-1, 0, +1}; ABSENT has none."""
        return _NUMERIC[self]

    @classmethod
    def parse(cls, token: str) -> Cast:
        """Parse a case-insensitive cast token."""
        try:
            return cls(str(token).strip().lower())
        except ValueError:
            raise DataError(f"Unknown cast token: {token!r}") from None


_NUMERIC = {
    Cast.YEA: 1.0,
    Cast.NAY: -1.0,
    Cast.ABSTAIN: 0.0,
    Cast.ABSENT: None,
}


class Group(str, Enum):
    """Pole of the left/right division."""

    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> Group:
        return Group.RIGHT if self is Group.LEFT else Group.LEFT

    @classmethod
    def parse(cls, token: str) -> Group:
        try:
            return cls(str(token).strip().lower())
        except ValueError:
            raise DataError(f"Unknown cluster label: {token!r}") from None


@dataclass(frozen=True, order=True)
class PeriodKey:
    """Label of an analysis period, e.g. "2014" or "2015-2016"."""

    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Legislator:
    """A legislator."""

    id: str
    name: str = ""
    party: str | None = None
    group: Group | None = None


@dataclass(frozen=True, eq=False)
class RollCall:
    """A recorded vote and every cast on it, keyed by legislator id."""

    id: str
    date: dt.date | None
    casts: Mapping[str, Cast] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class VoteMatrix:
    """Legislators x roll calls, immutable once built.

    Input order of legislators and roll calls is preserved; every
    downstream tie-break relies on it.
    """

    legislators: tuple[Legislator, ...]
    rollcalls: tuple[RollCall, ...]

    def __post_init__(self):
        object.__setattr__(self, "legislators", tuple(self.legislators))
        object.__setattr__(self, "rollcalls", tuple(self.rollcalls))

        seen: set[str] = set()
        for legislator in self.legislators:
            if legislator.id in seen:
                raise DataError(f"Duplicate legislator id: {legislator.id}")
            seen.add(legislator.id)

        for rc in self.rollcalls:
            unknown = [lid for lid in rc.casts if lid not in seen]
            if unknown:
                raise DataError(
                    f"Roll call {rc.id} references unknown legislators: {', '.join(unknown[:5])}"
                )

    @property
    def legislator_ids(self) -> list[str]:
        return [leg.id for leg in self.legislators]

    @property
    def rollcall_ids(self) -> list[str]:
        return [rc.id for rc in self.rollcalls]

    @cached_property
    def index(self) -> dict[str, int]:
        """Legislator id -> row position."""
        return {leg.id: i for i, leg in enumerate(self.legislators)}

    @cached_property
    def values(self) -> np.ndarray:
        """Numeric casts as a (legislators, roll calls) array, NaN where absent."""
        values = np.full((len(self.legislators), len(self.rollcalls)), np.nan)
        for j, rc in enumerate(self.rollcalls):
            for lid, cast in rc.casts.items():
                numeric = cast.numeric
                if numeric is not None:
                    values[self.index[lid], j] = numeric
        values.setflags(write=False)
        return values

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.legislators), len(self.rollcalls)

    def participation(self) -> np.ndarray:
        """Non-ABSENT cast count per legislator."""
        return np.sum(~np.isnan(self.values), axis=1)

    def subset(
        self,
        legislator_ids: Iterable[str] | None = None,
        rollcall_ids: Iterable[str] | None = None,
    ) -> VoteMatrix:
        """Restrict to the given legislators and/or roll calls, keeping input order."""
        keep_leg = set(legislator_ids) if legislator_ids is not None else None
        keep_rc = set(rollcall_ids) if rollcall_ids is not None else None

        legislators = [
            leg for leg in self.legislators if keep_leg is None or leg.id in keep_leg
        ]
        rollcalls = []
        for rc in self.rollcalls:
            if keep_rc is not None and rc.id not in keep_rc:
                continue
            if keep_leg is not None:
                rc = RollCall(
                    id=rc.id,
                    date=rc.date,
                    casts={lid: c for lid, c in rc.casts.items() if lid in keep_leg},
                )
            rollcalls.append(rc)
        return VoteMatrix(legislators=tuple(legislators), rollcalls=tuple(rollcalls))

    def without(self, legislator_ids: Iterable[str]) -> VoteMatrix:
        """Drop the given legislators and their casts."""
        drop = set(legislator_ids)
        if not drop:
            return self
        return self.subset(legislator_ids=[i for i in self.legislator_ids if i not in drop])

    @classmethod
    def from_values(
        cls,
        values: np.ndarray,
        legislator_ids: list[str] | None = None,
        rollcall_ids: list[str] | None = None,
        dates: list[dt.date] | None = None,
        parties: list[str | None] | None = None,
    ) -> VoteMatrix:
        """Build a matrix from a numeric array (NaN = ABSENT).

        Values other than -1, 0, 1 or NaN are rejected.
        """
        values = np.asarray(values, dtype=float)
        n_leg, n_rc = values.shape
        legislator_ids = legislator_ids or [f"L{i + 1}" for i in range(n_leg)]
        rollcall_ids = rollcall_ids or [f"V{j + 1}" for j in range(n_rc)]
        dates = dates or [dt.date(2000, 1, 1)] * n_rc
        parties = parties or [None] * n_leg

        to_cast = {1.0: Cast.YEA, -1.0: Cast.NAY, 0.0: Cast.ABSTAIN}
        rollcalls = []
        for j in range(n_rc):
            casts = {}
            for i in range(n_leg):
                v = values[i, j]
                if np.isnan(v):
                    casts[legislator_ids[i]] = Cast.ABSENT
                elif float(v) in to_cast:
                    casts[legislator_ids[i]] = to_cast[float(v)]
                else:
                    raise DataError(f"Invalid vote value {v} at ({i}, {j})")
            rollcalls.append(RollCall(id=rollcall_ids[j], date=dates[j], casts=casts))

        legislators = tuple(
            Legislator(id=lid, name=lid, party=party)
            for lid, party in zip(legislator_ids, parties, strict=True)
        )
        return cls(legislators=legislators, rollcalls=tuple(rollcalls))
