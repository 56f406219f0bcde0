"""B-Call - two-dimensional legislative scores (ideology and cohesion) from roll-call votes."""

__version__ = "1.0.0"
