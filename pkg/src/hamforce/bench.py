"""Wall-clock scaling of the classifier on random Ore graphs.

The classifier is bounded by O(n^3); a log-log fit of median runtime
against n gives the desk-scale check of that bound.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .classify import classify
from .families import gen_random_otg

__all__ = ["BenchRow", "bench_sizes", "fit_loglog_slope", "run_bench"]


@dataclass(frozen=True)
class BenchRow:
    n: int
    median_ns: int
    edges: int


def bench_sizes(max_n: int, start: int = 5) -> list[int]:
    """Geometric size ladder: start, 2*start, ... capped at max_n, which
    is always included."""
    if max_n < start:
        raise ValueError(f"need max_n >= {start}, got {max_n}")
    sizes = []
    n = start
    while n < max_n:
        sizes.append(n)
        n *= 2
    sizes.append(max_n)
    return sizes


def run_bench(max_n: int, samples: int, seed: int) -> list[BenchRow]:
    """Median classify() wall time over `samples` random Ore graphs at
    each ladder size.  The timed region is classification only; graph
    generation happens outside it."""
    if max_n < 5:
        raise ValueError(f"need max_n >= 5, got {max_n}")
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    rows = []
    for idx, n in enumerate(bench_sizes(max_n)):
        times = []
        edge_counts = []
        for i in range(samples):
            g = gen_random_otg(n, seed * 1_000_003 + idx * 101 + i)
            t0 = time.perf_counter_ns()
            classify(g)
            times.append(time.perf_counter_ns() - t0)
            edge_counts.append(g.edge_count())
        rows.append(BenchRow(n, int(statistics.median(times)), int(statistics.median(edge_counts))))
    return rows


def fit_loglog_slope(rows, min_n: int = 0) -> float:
    """Least-squares slope of log(median time) against log(n), over rows
    with n >= min_n.  Needs at least two such rows."""
    pts = [(r.n, r.median_ns) for r in rows if r.n >= min_n]
    if len(pts) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    xs = np.log([p[0] for p in pts])
    ys = np.log([max(p[1], 1) for p in pts])
    return float(np.polyfit(xs, ys, 1)[0])
