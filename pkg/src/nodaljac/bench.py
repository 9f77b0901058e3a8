"""Nodal group law vs. Cantor's algorithm: scalar multiplication timings.

For each degree a random curve and element Q are fixed (seeded), then
``scalar * Q`` is timed both with the single-polynomial law and with
double-and-add over reduced Cantor addition on the pair [f^2, h f]. Curve
generation is outside the timed region.
"""

from __future__ import annotations

import csv
import gc
import logging
import platform
import random
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import _backend
from .cantor import cantor_add, cantor_reduce, cantor_scalar_mul
from .nodal import NodalCurve
from .poly import random_irreducible

log = logging.getLogger(__name__)

DEFAULT_PRIME = 4294967311
DEFAULT_DEGREES = (5, 11, 23, 47, 53, 63, 71, 83, 95, 110, 130, 145, 150, 165, 193)
# published reference timings in seconds, other hardware: degree -> (nodal, cantor)
REFERENCE_TIMINGS = {
    5: (0.003, 0.023),
    11: (0.01, 0.081),
    23: (0.019, 0.357),
    47: (0.06, 2.15),
    53: (0.068, 2.98),
    63: (0.089, 4.96),
    71: (0.12, 6.95),
    83: (0.15, 10.98),
    95: (0.19, 16.67),
    110: (0.24, 26.36),
    130: (0.33, 45.46),
    145: (0.41, 64.9),
    150: (0.43, 72.3),
    165: (0.52, 100.39),
    193: (0.69, 167.29),
}

CSV_HEADER = ("degree", "nodal_seconds", "cantor_seconds", "ratio")


@dataclass
class BenchConfig:
    p: int = DEFAULT_PRIME
    degrees: Sequence[int] = DEFAULT_DEGREES
    scalar: Optional[int] = None  # defaults to p
    repetitions: int = 5
    seed: int = 0

    def __post_init__(self):
        self.degrees = tuple(int(d) for d in self.degrees)
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be a nonempty list of positive integers")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.scalar is None:
            self.scalar = self.p


@dataclass
class BenchRow:
    degree: int
    nodal_seconds: float
    cantor_seconds: float
    ratio: float = field(init=False)

    def __post_init__(self):
        if self.nodal_seconds <= 0 or self.cantor_seconds <= 0:
            raise ValueError("timings must be positive")
        self.ratio = self.cantor_seconds / self.nodal_seconds


class EquivalenceError(AssertionError):
    """The nodal and Cantor paths disagree on a benchmark workload."""


def _paired_median_times(
    fns: Sequence[Callable[[], object]], repetitions: int
) -> list[tuple[float, object]]:
    """Median wall time of each callable over ``repetitions`` runs.

    Runs are interleaved (a, b, a, b, ...) so slow phases of a shared host
    hit every path alike; the collector is paused as in timeit.
    """
    times = [[] for _ in fns]
    results: list[object] = [None] * len(fns)
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repetitions):
            for i, fn in enumerate(fns):
                t0 = time.perf_counter()
                results[i] = fn()
                times[i].append(time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return [(statistics.median(t), r) for t, r in zip(times, results)]


def bench_degree(cfg: BenchConfig, d: int) -> BenchRow:
    rng = random.Random(f"{cfg.seed}:{d}")
    curve = NodalCurve(cfg.p, random_irreducible(d, cfg.p, rng))
    H = curve.hyper_curve
    Q = curve.random_element(rng)
    R = curve.random_element(rng)
    MQ, MR = curve.to_mumford(Q), curve.to_mumford(R)

    # compose-only cross-check: Cantor steps 1-2 must give [f^2, h3 f] exactly
    for A, B, MA, MB in ((Q, Q, MQ, MQ), (Q, R, MQ, MR)):
        if cantor_add(H, MA, MB, reduce=False) != curve.to_mumford(curve.add(A, B)):
            raise EquivalenceError(f"degree {d}: composition disagrees with the nodal sum")

    n = cfg.scalar
    (nodal_s, nodal_result), (cantor_s, cantor_result) = _paired_median_times(
        [lambda: curve.scalar_mul(n, Q), lambda: cantor_scalar_mul(H, n, MQ, reduce=True)],
        cfg.repetitions,
    )

    embedded = curve.to_mumford(nodal_result)
    if cantor_result != cantor_reduce(H, embedded.u, embedded.v):
        raise EquivalenceError(f"degree {d}: reduced Cantor result differs from nodal result")
    return BenchRow(d, nodal_s, cantor_s)


def run_benchmark(
    cfg: BenchConfig,
    failures: Optional[list] = None,
    progress: Optional[Callable[[BenchRow], None]] = None,
) -> list[BenchRow]:
    """Time every degree in ``cfg``; a failing degree is logged (and
    appended to ``failures`` as ``(degree, message)``) without stopping
    the sweep."""
    rows = []
    for d in cfg.degrees:
        try:
            row = bench_degree(cfg, d)
        except (EquivalenceError, ArithmeticError, ValueError) as exc:
            log.error("degree %d failed: %s", d, exc)
            if failures is not None:
                failures.append((d, str(exc)))
            continue
        rows.append(row)
        if progress is not None:
            progress(row)
    return rows


def host_description() -> str:
    return f"{platform.node()} {platform.machine()} {platform.processor() or 'unknown-cpu'} python {platform.python_version()}"


def write_report(rows: Sequence[BenchRow], path, cfg: Optional[BenchConfig] = None) -> Path:
    """Write ``path`` (CSV) and ``path`` with suffix ``.dat`` (plot data).

    The plot-data file starts with ``#`` comment lines describing the run.
    Returns the plot-data path.
    """
    if not rows:
        raise ValueError("no benchmark rows to write")
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            w.writerow(
                [r.degree, f"{r.nodal_seconds:.6f}", f"{r.cantor_seconds:.6f}", f"{r.ratio:.6f}"]
            )

    dat = path.with_suffix(".dat") if path.suffix != ".dat" else path.with_name(path.name + ".plot")
    with open(dat, "w", encoding="utf-8") as fh:
        if cfg is not None:
            fh.write(f"# p={cfg.p}\n# scalar={cfg.scalar}\n# seed={cfg.seed}\n")
            fh.write(f"# repetitions={cfg.repetitions} (median reported)\n")
        fh.write(f"# host={host_description()}\n")
        fh.write(f"# kernels={_backend.name}\n")
        fh.write("# baseline: double-and-add over Cantor composition + reduction on [f^2, h f]\n")
        fh.write("# columns: degree nodal_seconds cantor_seconds\n")
        for r in rows:
            fh.write(f"{r.degree} {r.nodal_seconds:.6e} {r.cantor_seconds:.6e}\n")
    return dat

