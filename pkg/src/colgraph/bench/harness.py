"""Timing harness: warm-up at reduced scale, repeated measurement, median, CSV."""

from __future__ import annotations

import gc
import math
import resource
import statistics
import sys
import time
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from ..generators import DEFAULT_SEED
from ..io import append_csv

WARMUP_RUNS = 3
WARMUP_SCALE = 0.1
REPETITIONS = 5


class ChecksumMismatch(RuntimeError):
    """Repetitions, or two backends, disagreed on the work done."""


class ParameterError(ValueError):
    pass


@dataclass
class BenchParams:
    n: int
    m: int | None = None
    k: int | None = None
    p: float | None = None
    seed: int = DEFAULT_SEED
    reps: int = REPETITIONS
    warmups: int = WARMUP_RUNS
    warmup_scale: float = WARMUP_SCALE
    engine: str = "iterator"

    def scaled(self, factor: float) -> "BenchParams":
        """Same experiment at a fraction of the size (for warm-up)."""
        n = max(2, int(self.n * factor))
        m = None if self.m is None else min(max(1, int(self.m * factor)), n * (n - 1) // 2)
        return replace(self, n=n, m=m)


@dataclass
class BenchReport:
    experiment: str
    params: BenchParams
    backend: str = "colgraph"
    times_ms: list[float] = field(default_factory=list)
    checksum: float | int | None = None
    modeled_memory_bytes: int | None = None
    extra: dict = field(default_factory=dict)
    rss_bytes: int | None = None

    @property
    def median_ms(self) -> float:
        return statistics.median(self.times_ms) if self.times_ms else math.nan

    CSV_HEADER = [
        "experiment",
        "backend",
        "n",
        "m",
        "k",
        "p",
        "seed",
        "reps",
        "median_ms",
        "min_ms",
        "max_ms",
        "times_ms",
        "modeled_memory_bytes",
        "checksum",
        "rss_bytes",
    ]

    def csv_row(self) -> list:
        p = self.params

        def opt(x):
            return "" if x is None else x

        return [
            self.experiment,
            self.backend,
            p.n,
            opt(p.m),
            opt(p.k),
            opt(p.p),
            p.seed,
            p.reps,
            f"{self.median_ms:.3f}",
            f"{min(self.times_ms):.3f}" if self.times_ms else "",
            f"{max(self.times_ms):.3f}" if self.times_ms else "",
            ";".join(f"{t:.3f}" for t in self.times_ms),
            opt(self.modeled_memory_bytes),
            opt(self.checksum),
            opt(self.rss_bytes),
        ]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["median_ms"] = self.median_ms
        return d

    def format(self) -> str:
        p = self.params
        shown = {k: v for k, v in (("n", p.n), ("m", p.m), ("k", p.k), ("p", p.p)) if v is not None}
        head = " ".join(f"{k}={v}" for k, v in shown.items())
        lines = [
            f"{self.experiment} [{self.backend}] {head} seed={p.seed}",
            f"  median {self.median_ms:.2f} ms over {len(self.times_ms)} reps"
            f" ({', '.join(f'{t:.1f}' for t in self.times_ms)})",
            f"  checksum {self.checksum}",
        ]
        if self.modeled_memory_bytes is not None:
            mb = self.modeled_memory_bytes
            lines.append(f"  modeled memory {mb:,d} B ({mb / 2**20:.1f} MiB)")
        for key, value in self.extra.items():
            if isinstance(value, int) and key.endswith("bytes"):
                lines.append(f"  {key} {value:,d} B ({value / 2**20:.1f} MiB)")
            else:
                lines.append(f"  {key} {value}")
        if self.rss_bytes is not None:
            lines.append(f"  peak rss {self.rss_bytes / 2**20:.1f} MiB (observed, informational)")
        return "\n".join(lines)


def peak_rss_bytes() -> int:
    r = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # kilobytes on Linux, bytes on macOS
    return r if sys.platform == "darwin" else r * 1024


def _same(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return a == b or (math.isnan(a) and math.isnan(b))
    return a == b


def measure(experiment, params: BenchParams, backend: str = "colgraph", rss: bool = False) -> BenchReport:
    """Warm up, then time ``params.reps`` runs; setup is never timed.

    All repetitions must report the same checksum.
    """
    if params.reps < 1:
        raise ParameterError("reps must be at least 1")
    raw = params
    params = experiment.resolve(params)
    if params.warmups:
        # defaults (such as m derived from n) are recomputed at the small size
        small = experiment.resolve(raw.scaled(params.warmup_scale))
        for _ in range(params.warmups):
            ctx = experiment.setup(small, backend)
            experiment.run(ctx, small, backend)
    report = BenchReport(experiment.name, params, backend)
    ctx = None
    for _ in range(params.reps):
        ctx = experiment.setup(params, backend)
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter_ns()
            checksum = experiment.run(ctx, params, backend)
            t1 = time.perf_counter_ns()
        finally:
            gc.enable()
        report.times_ms.append((t1 - t0) / 1e6)
        if report.checksum is None:
            report.checksum = checksum
        elif not _same(report.checksum, checksum):
            raise ChecksumMismatch(f"{experiment.name}: checksum {checksum} differs from {report.checksum}")
    if backend == "colgraph":
        memory = experiment.memory(ctx, params)
        if memory is not None:
            report.modeled_memory_bytes = memory.get("modeled_memory_bytes")
            report.extra.update({k: v for k, v in memory.items() if k != "modeled_memory_bytes"})
    report.extra.update(experiment.notes(ctx, params))
    if rss:
        report.rss_bytes = peak_rss_bytes()
    return report


def save_report(report: BenchReport, path) -> None:
    append_csv(path, BenchReport.CSV_HEADER, [report.csv_row()])


def scaling_exponent(sizes, times) -> float:
    """Slope of the least-squares line through (log size, log time)."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(times, dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
