"""Built-in cohesion indices."""

from bcall.evaluation.metrics.rice import RiceIndex, rice_index
from bcall.evaluation.metrics.unity import UNITY_WEIGHTINGS, UnityIndex, unity_index

__all__ = ["RiceIndex", "UnityIndex", "UNITY_WEIGHTINGS", "rice_index", "unity_index"]
