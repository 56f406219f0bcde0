"""Configuration management module."""

from bcall.config.settings import IndexConfig, PipelineConfig, Settings, SynthSettings

__all__ = ["IndexConfig", "PipelineConfig", "Settings", "SynthSettings"]
