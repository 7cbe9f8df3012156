"""Work counters and wall-clock scaling runs for the decomposer.

Timing follows the usual ``timeit`` discipline: the cyclic garbage collector
is switched off while the clock runs (the decomposer allocates millions of
small objects, and collector passes would otherwise dominate the larger
sizes), small inputs are run in batches so one sample lasts long enough to
measure, and the median over samples is reported.
"""

from __future__ import annotations

import gc
import json
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Sequence

from .decomposer import Decomposition, WorkCounters, run
from .generator import gen_scaling_instance
from .graph import Multigraph

RATIO_LOW = 1.6
RATIO_HIGH = 2.6
COUNTER_RATIO_MAX = 2.2
DEFAULT_SIZES = (10**4, 10**5, 10**6)


def instrumented_decompose(g: Multigraph) -> tuple[Decomposition, WorkCounters]:
    state = run(g)
    return state.result(), state.counters


def _timed_decompose(g: Multigraph):
    # the full decompose() path; the state is kept for its counters
    state = run(g)
    state.result()
    return state


def time_once(fn: Callable[[], object], number: int = 1) -> tuple[float, object]:
    """Seconds per call of ``fn`` averaged over ``number`` calls with the
    collector off, plus the last return value."""
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        t0 = time.perf_counter()
        for _ in range(number):
            out = fn()
        return (time.perf_counter() - t0) / number, out
    finally:
        if enabled:
            gc.enable()


def calibrate(fn: Callable[[], object], min_sample: float) -> tuple[int, list[float], object]:
    """Smallest power-of-two batch whose run lasts at least ``min_sample``.

    A single call that is already long enough is kept as the first sample.
    """
    number = 1
    while True:
        t, out = time_once(fn, number)
        if t * number >= min_sample or number >= 1 << 16:
            return number, ([t] if number == 1 else []), out
        number *= 2


@dataclass
class SizeRow:
    target: int
    n: int
    m: int
    median_s: float
    ns_per_edge: float
    half_m: int
    half_median_s: float
    ratio: float
    counters: dict[str, int]
    counter_ratios: dict[str, float]
    samples: list[float] = field(default_factory=list)

    @property
    def time_ok(self) -> bool:
        return RATIO_LOW <= self.ratio <= RATIO_HIGH

    @property
    def counters_ok(self) -> bool:
        return all(r <= COUNTER_RATIO_MAX for r in self.counter_ratios.values())


@dataclass
class BenchReport:
    rows: list[SizeRow]
    reps: int
    elapsed_s: float

    @property
    def ok(self) -> bool:
        return all(r.time_ok and r.counters_ok for r in self.rows)

    def to_json(self) -> str:
        doc = {
            "reps": self.reps,
            "elapsed_s": round(self.elapsed_s, 3),
            "ratio_window": [RATIO_LOW, RATIO_HIGH],
            "counter_ratio_max": COUNTER_RATIO_MAX,
            "linearity": "PASS" if self.ok else "FAIL",
            "rows": [],
        }
        for r in self.rows:
            row = asdict(r)
            row["time_ok"] = r.time_ok
            row["counters_ok"] = r.counters_ok
            doc["rows"].append(row)
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        lines = [f"{'m':>9} {'median s':>10} {'ns/edge':>8} {'t(m)/t(m/2)':>12} {'max ctr ratio':>14}"]
        for r in self.rows:
            worst = max(r.counter_ratios.values()) if r.counter_ratios else 0.0
            lines.append(f"{r.m:>9} {r.median_s:>10.4f} {r.ns_per_edge:>8.0f} "
                         f"{r.ratio:>12.3f} {worst:>14.3f}")
        lines.append(f"linearity {'PASS' if self.ok else 'FAIL'} ({self.elapsed_s:.1f} s)")
        return "\n".join(lines)


def measure_pair(target: int, reps: int = 5, min_sample: float = 0.2) -> SizeRow:
    """Time the scaling instance of ``target`` edges against the one of half
    that size. Samples alternate between the two so drift hits both."""
    big = gen_scaling_instance(target)
    small = gen_scaling_instance(target // 2)
    f_big = lambda: _timed_decompose(big)  # noqa: E731
    f_small = lambda: _timed_decompose(small)  # noqa: E731
    n_small, t_small, st_small = calibrate(f_small, min_sample)
    n_big, t_big, st_big = calibrate(f_big, min_sample)
    while len(t_small) < reps or len(t_big) < reps:
        if len(t_small) < reps:
            t_small.append(time_once(f_small, n_small)[0])
        if len(t_big) < reps:
            t_big.append(time_once(f_big, n_big)[0])
    med_big = statistics.median(t_big)
    med_small = statistics.median(t_small)
    c_big = st_big.counters.as_dict()
    c_small = st_small.counters.as_dict()
    ratios = {k: (c_big[k] / c_small[k] if c_small[k] else 0.0) for k in c_big}
    return SizeRow(
        target=target, n=big.n, m=big.m,
        median_s=med_big, ns_per_edge=med_big / big.m * 1e9,
        half_m=small.m, half_median_s=med_small,
        ratio=med_big / med_small,
        counters=c_big, counter_ratios=ratios, samples=t_big,
    )


def run_bench(sizes: Sequence[int] = DEFAULT_SIZES, reps: int = 5,
              min_sample: float = 0.2, log: Optional[Callable[[str], None]] = None) -> BenchReport:
    if reps < 1:
        raise ValueError("reps must be positive")
    t0 = time.perf_counter()
    rows = []
    for s in sizes:
        row = measure_pair(s, reps, min_sample)
        if log:
            log(f"m={row.m}: median {row.median_s:.4f} s, ratio {row.ratio:.3f}")
        rows.append(row)
    return BenchReport(rows, reps, time.perf_counter() - t0)
