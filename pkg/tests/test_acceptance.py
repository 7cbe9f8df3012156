"""Acceptance criteria, one test each.

Every test records a one-line verdict in ``RESULTS``; the conftest hook
prints them at the end of the session. Run this file directly
(``python3 tests/test_acceptance.py``) to get the same lines without pytest.
"""

import sys
import time
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from aux3ecc.bench import COUNTER_RATIO_MAX, RATIO_HIGH, RATIO_LOW, run_bench  # noqa: E402
from aux3ecc.decomposer import InvariantViolation, decompose, run  # noqa: E402
from aux3ecc.generator import planted_corpus, random_corpus  # noqa: E402
from aux3ecc.io_formats import write_decomposition  # noqa: E402
from aux3ecc.oracle import check_equivalence, reference_aux_subgraphs, subgraph_is_3ec  # noqa: E402
from conftest import GOLDEN_GRAPHS  # noqa: E402
from invariants import check_invariants  # noqa: E402

RANDOM_COUNT, PLANTED_COUNT, SEED = 1000, 100, 20240601
BENCH_SIZES, BENCH_REPS, BENCH_BUDGET_S = (10**4, 10**5, 10**6), 3, 60.0
GOLDEN = Path(__file__).parent / "golden"

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    print(RESULTS[n])


@lru_cache(maxsize=1)
def corpus():
    items = [(f"random seed={s}", g) for s, g in random_corpus(RANDOM_COUNT, SEED, 10, 16)]
    items += [(f"planted seed={spec.seed}", p.graph) for spec, p in planted_corpus(PLANTED_COUNT, SEED)]
    return items


def test_criterion_1_and_2_oracle_equivalence():
    t0 = time.perf_counter()
    eq_fail, ec_fail, checked = [], [], 0
    for name, g in corpus():
        d = decompose(g)
        ref = reference_aux_subgraphs(g)
        verdict = check_equivalence(d, ref, check_connectivity=False)
        if not verdict:
            eq_fail.append(f"{name}: {verdict}")
        for comp in d.components:
            if len(comp.sigma) >= 2:
                checked += 1
                if not subgraph_is_3ec(sorted(comp.sigma), [d.endpoints(e) for e in comp.alpha]):
                    ec_fail.append(f"{name}: component {sorted(comp.sigma)}")
    took = time.perf_counter() - t0
    total = len(corpus())
    record(1, not eq_fail and took < 120,
           f"{total - len(eq_fail)}/{total} instances equal to the oracle ({took:.1f} s)")
    record(2, not ec_fail, f"{checked - len(ec_fail)}/{checked} multi-vertex components 3-edge-connected")
    assert not eq_fail, eq_fail[:5]
    assert not ec_fail, ec_fail[:5]
    assert took < 120


def test_criterion_3_golden_bytes():
    bad = []
    for name, make in sorted(GOLDEN_GRAPHS.items()):
        if write_decomposition(decompose(make()), "text") != (GOLDEN / f"{name}.txt").read_bytes():
            bad.append(name)
    if write_decomposition(decompose(GOLDEN_GRAPHS["K4"]()), "json") != (GOLDEN / "K4.json").read_bytes():
        bad.append("K4.json")
    record(3, not bad, f"{len(GOLDEN_GRAPHS) + 1 - len(bad)}/{len(GOLDEN_GRAPHS) + 1} golden files match"
           + (f" (mismatch: {', '.join(bad)})" if bad else ""))
    assert not bad


def test_criterion_4_linearity():
    report = run_bench(BENCH_SIZES, BENCH_REPS)
    ratios = ", ".join(f"m={r.m}: {r.ratio:.2f}" for r in report.rows)
    worst = max(max(r.counter_ratios.values()) for r in report.rows)
    ok = report.ok and report.elapsed_s < BENCH_BUDGET_S
    record(4, ok, f"time ratios [{ratios}] in [{RATIO_LOW}, {RATIO_HIGH}], "
                  f"max counter ratio {worst:.3f} <= {COUNTER_RATIO_MAX}, bench {report.elapsed_s:.1f} s")
    for r in report.rows:
        assert RATIO_LOW <= r.ratio <= RATIO_HIGH, r
        assert r.counters_ok, r.counter_ratios
    assert report.elapsed_s < BENCH_BUDGET_S


def test_criterion_5_invariant_suite():
    bad = []
    for name, g in corpus():
        state = run(g, debug=True)  # debug also rejects any second insertion of an edge
        d = state.result()
        problems = check_invariants(d)
        loops = sum(len(x) for x in g.loops)
        if state.counters.alpha_insertions != sum(len(c.alpha) for c in d.components) - loops:
            problems.append("alpha insertion count differs from alpha sizes")
        if write_decomposition(d) != write_decomposition(decompose(g)):
            problems.append("two runs differ")
        if problems:
            bad.append(f"{name}: {problems[0]}")
    record(5, not bad, f"{len(corpus()) - len(bad)}/{len(corpus())} instances satisfy all invariants")
    assert not bad, bad[:5]


def test_criterion_6_debug_assertions():
    failures = []
    for name, g in corpus():
        try:
            decompose(g, debug=True)
        except InvariantViolation as exc:
            failures.append(f"{name}: {exc}")
    record(6, not failures, f"{len(failures)} assertion failures across {len(corpus())} debug runs")
    assert not failures, failures[:5]


if __name__ == "__main__":
    for test in (test_criterion_1_and_2_oracle_equivalence, test_criterion_3_golden_bytes,
                 test_criterion_4_linearity, test_criterion_5_invariant_suite,
                 test_criterion_6_debug_assertions):
        try:
            test()
        except AssertionError:
            pass
    sys.exit(0 if all(" PASS " in line for line in RESULTS.values()) else 1)
