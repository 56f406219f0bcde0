"""Vote-agreement distances between legislators and cluster centroids."""

from dataclasses import dataclass

import numpy as np

from bcall.dataset.schema import VoteMatrix
from bcall.errors import DataError

# |(+1) - (-1)|: the distance of pairs that never voted on the same roll call.
MAX_DISTANCE = 2.0


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric legislator distance matrix in matrix order."""

    ids: tuple[str, ...]
    entries: np.ndarray
    shared_counts: np.ndarray

    def _pos(self, legislator_id: str) -> int:
        try:
            return self.ids.index(legislator_id)
        except ValueError:
            raise KeyError(legislator_id) from None

    def __getitem__(self, pair: tuple[str, str]) -> float:
        x, y = pair
        return float(self.entries[self._pos(x), self._pos(y)])

    def shared(self, x: str, y: str) -> int:
        return int(self.shared_counts[self._pos(x), self._pos(y)])


def centroid_distances(values: np.ndarray, vector: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Mean absolute difference of each row to a (possibly real-valued) vote vector.

    Only columns where both sides are defined count. Rows sharing no
    column get the maximum distance.

    Args:
        values: (rows, roll calls) array, NaN where undefined
        vector: (roll calls,) array, NaN where undefined

    Returns:
        (distances, shared column counts)
    """
    present = ~np.isnan(values) & ~np.isnan(vector)[np.newaxis, :]
    diff = np.where(present, np.abs(values - vector[np.newaxis, :]), 0.0)
    counts = present.sum(axis=1)
    totals = diff.sum(axis=1)
    distances = np.full(values.shape[0], MAX_DISTANCE)
    shared = counts > 0
    distances[shared] = totals[shared] / counts[shared]
    return distances, counts


def cluster_centroid(values: np.ndarray, members: np.ndarray) -> np.ndarray:
    """Per-roll-call mean over members with a numeric cast (NaN if none)."""
    rows = values[members]
    counts = np.sum(~np.isnan(rows), axis=0)
    sums = np.nansum(rows, axis=0)
    centroid = np.full(values.shape[1], np.nan)
    np.divide(sums, counts, out=centroid, where=counts > 0)
    return centroid


def pairwise_distance(m: VoteMatrix) -> DistanceMatrix:
    """Distance between every pair of legislators.

    Raises:
        DataError: Fewer than two legislators
    """
    n = len(m.legislators)
    if n < 2:
        raise DataError("pairwise distance needs at least 2 legislators")

    values = m.values
    entries = np.empty((n, n))
    shared = np.empty((n, n), dtype=int)
    for i in range(n):
        entries[i], shared[i] = centroid_distances(values, values[i])
    np.fill_diagonal(entries, 0.0)

    return DistanceMatrix(ids=tuple(m.legislator_ids), entries=entries, shared_counts=shared)
