"""RICE index: mean absolute yea/nay margin of a group."""

from collections.abc import Sequence

from bcall.evaluation.base import CohesionIndex, GroupVoteTally
from bcall.evaluation.registry import register_index


def rollcall_rice(tally: GroupVoteTally) -> float | None:
    """|yea - nay| / (yea + nay), None when nobody voted yea or nay."""
    if tally.decisive == 0:
        return None
    return abs(tally.yea - tally.nay) / tally.decisive


def rice_index(tallies: Sequence[GroupVoteTally]) -> float | None:
    """Unweighted mean RICE over roll calls with at least one yea or nay.

    Returns:
        RICE in [0, 1], or None if no roll call qualifies
    """
    values = [r for r in map(rollcall_rice, tallies) if r is not None]
    if not values:
        return None
    return sum(values) / len(values)


@register_index("rice")
class RiceIndex(CohesionIndex):
    """RICE cohesion index."""

    name = "rice"
    description = "Mean |yea - nay| / (yea + nay) per roll call"

    def compute(
        self,
        tallies: Sequence[GroupVoteTally],
        chamber: Sequence[GroupVoteTally] | None = None,
    ) -> float | None:
        return rice_index(tallies)
