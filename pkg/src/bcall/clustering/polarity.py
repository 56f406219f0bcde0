"""Left/right bipartition of legislators by agglomerative growth.

The two most distant legislators seed the clusters. Each step recomputes
both centroids and moves the unassigned legislator closest to either
centroid into that cluster. A refinement pass then moves legislators that
sit strictly closer to the other cluster's centroid until nothing moves.

Ties always resolve to the earliest legislator in input order, then to the
first-seeded cluster.
"""

import logging
from dataclasses import dataclass, field, replace

import numpy as np

from bcall.clustering.distance import (
    DistanceMatrix,
    centroid_distances,
    cluster_centroid,
    pairwise_distance,
)
from bcall.dataset.schema import Group, VoteMatrix
from bcall.errors import DataError

logger = logging.getLogger(__name__)

DEFAULT_MAX_REFINE_ITERS = 100


@dataclass(frozen=True, eq=False)
class PolarityPartition:
    """Assignment of every legislator to LEFT or RIGHT."""

    ids: tuple[str, ...]
    assignment: dict[str, Group]
    centroids: tuple[np.ndarray, np.ndarray]  # (LEFT, RIGHT)
    seeds: tuple[str, str]
    iterations: int = 0
    converged: bool = False
    refused_moves: int = 0
    convention: str = "first-seed"
    warnings: list[str] = field(default_factory=list)

    def members(self, group: Group) -> list[str]:
        return [i for i in self.ids if self.assignment[i] is group]

    def as_array(self) -> np.ndarray:
        """0 for LEFT, 1 for RIGHT, in ids order."""
        return np.array([0 if self.assignment[i] is Group.LEFT else 1 for i in self.ids])

    def swapped(self) -> "PolarityPartition":
        """Same clusters with LEFT and RIGHT exchanged."""
        return replace(
            self,
            assignment={i: g.other for i, g in self.assignment.items()},
            centroids=(self.centroids[1], self.centroids[0]),
        )


def _check_ids(m: VoteMatrix, ids: tuple[str, ...]):
    if tuple(m.legislator_ids) != tuple(ids):
        raise ValueError("Partition/distance legislators do not match the vote matrix")


def _build(
    m: VoteMatrix,
    clusters: np.ndarray,
    seeds: tuple[str, str],
    **kwargs,
) -> PolarityPartition:
    values = m.values
    ids = tuple(m.legislator_ids)
    return PolarityPartition(
        ids=ids,
        assignment={
            lid: Group.LEFT if k == 0 else Group.RIGHT
            for lid, k in zip(ids, clusters, strict=True)
        },
        centroids=(cluster_centroid(values, clusters == 0), cluster_centroid(values, clusters == 1)),
        seeds=seeds,
        **kwargs,
    )


def agglomerate(m: VoteMatrix, d: DistanceMatrix) -> PolarityPartition:
    """Grow two clusters from the most distant pair of legislators.

    The first seed's cluster is labeled LEFT until :func:`orient_labels`
    says otherwise.

    Raises:
        DataError: Fewer than two legislators
    """
    n = len(m.legislators)
    if n < 2:
        raise DataError("cannot bipartition: fewer than 2 legislators")
    _check_ids(m, d.ids)

    # Row-major upper triangle: argmax returns the earliest maximal pair.
    rows, cols = np.triu_indices(n, k=1)
    best = int(np.argmax(d.entries[rows, cols]))
    x, y = int(rows[best]), int(cols[best])
    logger.debug(f"Seeds {d.ids[x]} and {d.ids[y]} at distance {d.entries[x, y]:.4f}")

    values = m.values
    clusters = np.full(n, -1)
    clusters[x], clusters[y] = 0, 1

    while True:
        pool = np.flatnonzero(clusters == -1)
        if pool.size == 0:
            break
        dist = np.column_stack([
            centroid_distances(values[pool], cluster_centroid(values, clusters == 0))[0],
            centroid_distances(values[pool], cluster_centroid(values, clusters == 1))[0],
        ])
        row, k = divmod(int(np.argmin(dist)), 2)
        clusters[pool[row]] = k

    return _build(m, clusters, seeds=(d.ids[x], d.ids[y]))


def refine(
    p: PolarityPartition,
    m: VoteMatrix,
    max_iters: int = DEFAULT_MAX_REFINE_ITERS,
) -> PolarityPartition:
    """Move legislators strictly closer to the other centroid, in batched sweeps.

    Stops when a sweep moves nobody (converged) or after ``max_iters``
    sweeps. A batch that would empty a cluster keeps that cluster's
    earliest mover in place and counts the refusal.
    """
    _check_ids(m, p.ids)
    if max_iters <= 0:
        return replace(p, iterations=0, converged=False)

    values = m.values
    clusters = p.as_array()
    converged = False
    refused = 0
    warnings = list(p.warnings)
    sweeps = 0

    for sweeps in range(1, max_iters + 1):
        d_left = centroid_distances(values, cluster_centroid(values, clusters == 0))[0]
        d_right = centroid_distances(values, cluster_centroid(values, clusters == 1))[0]
        own = np.where(clusters == 0, d_left, d_right)
        other = np.where(clusters == 0, d_right, d_left)
        movers = np.flatnonzero(other < own)
        if movers.size == 0:
            converged = True
            break

        updated = clusters.copy()
        updated[movers] = 1 - updated[movers]
        for k in (0, 1):
            if not np.any(updated == k):
                keep = movers[clusters[movers] == k][0]
                updated[keep] = k
                refused += 1
                message = f"Refused move of {p.ids[keep]}: it would empty its cluster"
                logger.warning(message)
                warnings.append(message)

        if np.array_equal(updated, clusters):
            break
        clusters = updated

    if not converged:
        logger.warning(f"Refinement stopped after {sweeps} sweeps without converging")

    return _build(
        m,
        clusters,
        seeds=p.seeds,
        iterations=sweeps,
        converged=converged,
        refused_moves=p.refused_moves + refused,
        convention=p.convention,
        warnings=warnings,
    )


def orient_labels(p: PolarityPartition, anchor: str | None = None) -> PolarityPartition:
    """Decide which cluster is LEFT.

    With an anchor, the anchor's cluster is LEFT; otherwise the cluster
    holding the first seed is LEFT.

    Raises:
        DataError: The anchor is not in the partition
    """
    if anchor is not None:
        if anchor not in p.assignment:
            raise DataError(f"Unknown anchor legislator: {anchor}")
        oriented = p.swapped() if p.assignment[anchor] is Group.RIGHT else p
        return replace(oriented, convention="anchor")

    oriented = p.swapped() if p.assignment[p.seeds[0]] is Group.RIGHT else p
    return replace(oriented, convention="first-seed")


def bipartition(
    m: VoteMatrix,
    max_refine_iters: int = DEFAULT_MAX_REFINE_ITERS,
    anchor: str | None = None,
) -> PolarityPartition:
    """Distances, agglomeration, refinement and labeling in one call."""
    partition = agglomerate(m, pairwise_distance(m))
    partition = refine(partition, m, max_refine_iters)
    return orient_labels(partition, anchor)
