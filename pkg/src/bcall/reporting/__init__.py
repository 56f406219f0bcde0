"""Output artifacts."""

from bcall.reporting.writer import ArtifactWriter, build_manifest

__all__ = ["ArtifactWriter", "build_manifest"]
