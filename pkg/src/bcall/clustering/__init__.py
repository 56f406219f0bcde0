"""LEFT/RIGHT polarity clustering and external grouping sources."""

from bcall.clustering.distance import (
    MAX_DISTANCE,
    DistanceMatrix,
    centroid_distances,
    cluster_centroid,
    pairwise_distance,
)
from bcall.clustering.labels import GroupResolution, GroupResolver, GroupSource
from bcall.clustering.polarity import (
    PolarityPartition,
    agglomerate,
    bipartition,
    orient_labels,
    refine,
)

__all__ = [
    "MAX_DISTANCE",
    "DistanceMatrix",
    "centroid_distances",
    "cluster_centroid",
    "pairwise_distance",
    "GroupResolution",
    "GroupResolver",
    "GroupSource",
    "PolarityPartition",
    "agglomerate",
    "bipartition",
    "orient_labels",
    "refine",
]
