"""UNITY index: RICE weighted by how contested each roll call was.

With ``closeness`` weighting, roll call j counts with weight
``1 - |Y - N| / (Y + N)`` computed on the whole chamber, so lopsided votes
where every group agrees contribute little. ``uniform`` weighting reduces
UNITY to RICE.
"""

from collections.abc import Sequence

from bcall.evaluation.base import CohesionIndex, GroupVoteTally
from bcall.evaluation.metrics.rice import rollcall_rice
from bcall.evaluation.registry import register_index
from bcall.errors import ConfigError

UNITY_WEIGHTINGS = ("closeness", "uniform")


def closeness_weight(chamber: GroupVoteTally) -> float:
    if chamber.decisive == 0:
        return 0.0
    return 1.0 - abs(chamber.yea - chamber.nay) / chamber.decisive


def unity_index(
    tallies: Sequence[GroupVoteTally],
    chamber_tallies: Sequence[GroupVoteTally],
    weighting: str = "closeness",
) -> float | None:
    """Weighted mean of per-roll-call RICE.

    Args:
        tallies: One group's tallies
        chamber_tallies: Chamber-wide tallies, matched by roll call id
        weighting: "closeness" or "uniform"

    Returns:
        UNITY in [0, 1], or None if every weight is zero
    """
    if weighting not in UNITY_WEIGHTINGS:
        raise ConfigError(f"Unknown unity weighting: {weighting}")
    chamber = {t.rollcall_id: t for t in chamber_tallies}

    total = 0.0
    weights = 0.0
    for tally in tallies:
        rice = rollcall_rice(tally)
        if rice is None:
            continue
        if weighting == "uniform":
            w = 1.0
        else:
            whole = chamber.get(tally.rollcall_id)
            if whole is None:
                raise ValueError(f"No chamber tally for roll call {tally.rollcall_id}")
            if tally.participants > whole.participants:
                raise ValueError(
                    f"Group {tally.group} has {tally.participants} participants on roll call "
                    f"{tally.rollcall_id}, the chamber only {whole.participants}"
                )
            w = closeness_weight(whole)
        total += w * rice
        weights += w

    if weights == 0:
        return None
    return total / weights


@register_index("unity")
class UnityIndex(CohesionIndex):
    """UNITY cohesion index."""

    name = "unity"
    description = "RICE weighted by chamber-wide closeness of each roll call"

    def __init__(self, config: dict | None = None):
        super().__init__(config)
        self.weighting = self.config.get("unity_weighting", "closeness")

    def compute(
        self,
        tallies: Sequence[GroupVoteTally],
        chamber: Sequence[GroupVoteTally] | None = None,
    ) -> float | None:
        return unity_index(tallies, chamber or [], self.weighting)
