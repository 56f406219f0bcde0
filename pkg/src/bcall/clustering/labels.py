"""Grouping sources: clustering or externally supplied LEFT/RIGHT labels.

Supported ``--groups`` values:

- ``cluster``: agglomerative bipartition of each period
- ``file=<path>``: ``legislator_id, cluster[, period]`` (the ``clusters.csv`` layout)
- ``party=<path>``: ``party, cluster`` mapping applied to each legislator's party
- ``score=<path>``: ``legislator_id, period, score``; negative scores are LEFT
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd

from bcall.clustering.polarity import DEFAULT_MAX_REFINE_ITERS, PolarityPartition, bipartition
from bcall.dataset.loader import load_score_table
from bcall.dataset.schema import Group, PeriodKey, VoteMatrix
from bcall.errors import ConfigError, DataError

logger = logging.getLogger(__name__)

SOURCE_KINDS = ("cluster", "file", "party", "score")


@dataclass(frozen=True)
class GroupSource:
    """Where LEFT/RIGHT labels come from."""

    kind: str = "cluster"
    path: Path | None = None

    @classmethod
    def parse(cls, spec: str) -> "GroupSource":
        spec = (spec or "cluster").strip()
        if spec == "cluster":
            return cls()
        kind, sep, path = spec.partition("=")
        kind = kind.strip()
        if not sep or kind not in SOURCE_KINDS[1:] or not path.strip():
            raise ConfigError(
                f"Invalid grouping source {spec!r} "
                "(expected cluster, file=<path>, party=<path> or score=<path>)"
            )
        return cls(kind=kind, path=Path(path.strip()))

    def describe(self) -> str:
        return self.kind if self.path is None else f"{self.kind}={self.path}"


def _read_frame(path: Path, columns: list[str]) -> pd.DataFrame:
    if not path.exists():
        raise DataError(f"Label file not found: {path}")
    df = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    df.columns = [c.strip().lower() for c in df.columns]
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise DataError(f"{path}: missing columns {', '.join(missing)}")
    return df


def load_label_file(path: Path) -> dict[str | None, dict[str, Group]]:
    """Read ``legislator_id, cluster[, period]`` labels.

    Returns:
        Labels keyed by period label; rows without a period sit under ``None``
        and apply to every period
    """
    path = Path(path)
    df = _read_frame(path, ["legislator_id", "cluster"])
    has_period = "period" in df.columns

    labels: dict[str | None, dict[str, Group]] = {}
    for i, row in df.iterrows():
        lid = str(row["legislator_id"]).strip()
        period = (str(row["period"]).strip() or None) if has_period else None
        try:
            group = Group.parse(str(row["cluster"]))
        except DataError as e:
            raise DataError(f"{path} line {i + 2}: {e.message}") from None
        scope = labels.setdefault(period, {})
        if scope.get(lid, group) is not group:
            raise DataError(f"{path} line {i + 2}: conflicting labels for {lid}")
        scope[lid] = group
    return labels


def load_party_map(path: Path) -> dict[str, Group]:
    """Read a ``party, cluster`` mapping."""
    path = Path(path)
    df = _read_frame(path, ["party", "cluster"])
    mapping = {}
    for i, row in df.iterrows():
        try:
            mapping[str(row["party"]).strip()] = Group.parse(str(row["cluster"]))
        except DataError as e:
            raise DataError(f"{path} line {i + 2}: {e.message}") from None
    return mapping


def groups_from_scores(scores: pd.DataFrame) -> dict[str | None, dict[str, Group]]:
    """Split a score table by sign: negative is LEFT, zero or positive RIGHT."""
    labels: dict[str | None, dict[str, Group]] = {}
    for lid, period, score in scores[["legislator_id", "period", "score"]].itertuples(index=False):
        labels.setdefault(period, {})[lid] = Group.LEFT if score < 0 else Group.RIGHT
    return labels


@dataclass
class GroupResolution:
    """Labels of one period and how they were obtained."""

    groups: dict[str, Group]
    partition: PolarityPartition | None = None
    warnings: list[str] = field(default_factory=list)


class GroupResolver:
    """Resolves LEFT/RIGHT groups per period.

    External files are read once at construction; :meth:`resolve` is safe to
    call from several threads.
    """

    def __init__(
        self,
        source: GroupSource | None = None,
        anchor: str | None = None,
        max_refine_iters: int = DEFAULT_MAX_REFINE_ITERS,
    ):
        self.source = source or GroupSource()
        self.anchor = anchor
        self.max_refine_iters = max_refine_iters
        self._labels: dict[str | None, dict[str, Group]] = {}
        self._party_map: dict[str, Group] = {}

        if self.source.kind == "file":
            self._labels = load_label_file(self.source.path)
        elif self.source.kind == "party":
            self._party_map = load_party_map(self.source.path)
        elif self.source.kind == "score":
            self._labels = groups_from_scores(load_score_table(self.source.path))

        if anchor and self.source.kind != "cluster":
            logger.info(f"Anchor {anchor} ignored: groups come from {self.source.describe()}")

    def resolve(self, m: VoteMatrix, period: PeriodKey) -> GroupResolution:
        """LEFT/RIGHT label for every legislator of a period matrix.

        Raises:
            DataError: A legislator has no label, or clustering is impossible
        """
        if self.source.kind == "cluster":
            return self._cluster(m, period)

        if self.source.kind == "party":
            groups = {
                leg.id: self._party_map[leg.party]
                for leg in m.legislators
                if leg.party in self._party_map
            }
        else:
            groups = dict(self._labels.get(None, {}))
            groups.update(self._labels.get(str(period), {}))
            groups = {lid: groups[lid] for lid in m.legislator_ids if lid in groups}

        missing = [lid for lid in m.legislator_ids if lid not in groups]
        if missing:
            shown = ", ".join(missing[:10])
            more = f" (+{len(missing) - 10} more)" if len(missing) > 10 else ""
            raise DataError(
                f"No {self.source.kind} label for legislators: {shown}{more}", period=str(period)
            )
        return GroupResolution(groups=groups)

    def _cluster(self, m: VoteMatrix, period: PeriodKey) -> GroupResolution:
        warnings = []
        anchor = self.anchor
        if anchor is not None and anchor not in m.index:
            message = f"[{period}] anchor {anchor} absent, using first-seed convention"
            logger.warning(message)
            warnings.append(message)
            anchor = None

        partition = bipartition(m, self.max_refine_iters, anchor)
        warnings.extend(f"[{period}] {w}" for w in partition.warnings)
        if not partition.converged:
            warnings.append(f"[{period}] refinement did not converge in {partition.iterations} sweeps")
        return GroupResolution(
            groups=dict(partition.assignment),
            partition=partition,
            warnings=warnings,
        )
