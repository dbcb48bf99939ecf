"""Quantum discord dynamics of two entangled phonon modes under collapse and decoherence models."""

from ._qdiscord import (
    ConfigError,
    ConvergenceError,
    DetectionResult,
    EvalMode,
    ExclusionPoint,
    ConditionalWeights,
    bessel_i0e,
    bessel_i1e,
    closed_form_state,
    csl_bound_scan,
    decay_rate,
    detection_time,
    discord,
    discord_minimized,
    discord_trace,
    envelope_discord,
    gamma_perp,
    initial_state,
    load_config,
    numerical_state,
    preset,
    spectrum,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
