"""Scalar Preisach hysteresis models (classical double integral and state-space)."""

from ._core import (
    Branch,
    ConfigError,
    ContractViolation,
    CspmModel,
    Density,
    ErrorStats,
    HysteronGrid,
    InputSequence,
    Memory,
    MetricsReport,
    ParseError,
    PlaneBounds,
    QuadratureConfig,
    QuadResult,
    SamplingConfig,
    Saturation,
    SspmModel,
    SspmOptions,
    SspmState,
    bench,
    cspm_output,
    error_metrics,
    load_csv,
    major_loop_sine,
    multisine,
    oracle_check,
    oracle_run,
    region_integral,
    relative_error_series,
    save_csv,
    segment_integral_alpha,
    segment_integral_beta,
    simulate,
    sspm_step,
    timing_metrics,
    total_mass,
)

__all__ = [name for name in dir() if not name.startswith("_")]
