"""Benchmark harness reproducing the classic graph-library experiment shapes."""

from .experiments import EXPERIMENTS, compare_backends, get_experiment, run_experiment
from .harness import (
    BenchParams,
    BenchReport,
    ChecksumMismatch,
    ParameterError,
    measure,
    save_report,
    scaling_exponent,
)
