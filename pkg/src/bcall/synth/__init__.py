"""Synthetic vote generator with known ground truth."""

from bcall.synth.generator import (
    RNG_NAME,
    SynthConfig,
    SynthResult,
    generate,
    generate_panel,
    yearly_configs,
)

__all__ = ["RNG_NAME", "SynthConfig", "SynthResult", "generate", "generate_panel", "yearly_configs"]
