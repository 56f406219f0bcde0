"""Pipeline runner."""

from bcall.runner.pipeline import PipelineResult, PipelineRunner, RunConfig, run_pipeline

__all__ = ["PipelineResult", "PipelineRunner", "RunConfig", "run_pipeline"]
