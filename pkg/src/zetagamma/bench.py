"""Timing harness: brute-force vs factorized off-diagonal summation.

The factorized route turns the O(k^2) pair sum into O(k); this module
measures the gap and, more importantly, refuses to report timings unless
the two routes agree to 1e-10, so a benchmark run doubles as a
correctness gate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .errors import ConsistencyError
from .series import ORACLE_CAP, SeriesParams, offdiag_factorized, offdiag_naive

#: Reports with a larger naive/factorized discrepancy abort the run.
MAX_ALLOWED_DIFF = 1e-10

CSV_HEADER = ("k", "t", "naive_seconds", "factorized_seconds", "max_abs_diff")


@dataclass(frozen=True)
class BenchReport:
    """One timed naive-vs-factorized comparison at a single (k, t)."""

    k: int
    t: float
    naive_seconds: float
    factorized_seconds: float
    max_abs_diff: float

    def csv_row(self) -> tuple:
        return (self.k, self.t, self.naive_seconds,
                self.factorized_seconds, self.max_abs_diff)


def _median_time(fn, repeats: int) -> tuple[float, float]:
    # Monotonic wall clock, median of `repeats` runs; returns (seconds, value).
    times = []
    value = None
    for _ in range(repeats):
        start = time.monotonic()
        value = fn()
        times.append(time.monotonic() - start)
    times.sort()
    return times[len(times) // 2], value


def bench_offdiag(t: float, k_list: Sequence[int], cap: int = ORACLE_CAP,
                  repeats: int = 3) -> list[BenchReport]:
    """Time both off-diagonal routes on identical inputs.

    Uses the alternating variant (the production gamma route).  Each k in
    ``k_list`` must respect the brute-force cap.  Raises
    ``ConsistencyError`` if any discrepancy exceeds ``MAX_ALLOWED_DIFF``.
    """
    reports = []
    for k in k_list:
        params = SeriesParams(0.5, t, int(k))
        naive_s, naive_v = _median_time(
            lambda: offdiag_naive(params, alternating=True, cap=cap), repeats)
        fact_s, fact_v = _median_time(
            lambda: offdiag_factorized(params, alternating=True), repeats)
        diff = abs(naive_v - fact_v)
        if diff > MAX_ALLOWED_DIFF:
            raise ConsistencyError(
                f"naive and factorized off-diagonal sums disagree by {diff:.3e} "
                f"at k={k}, t={t!r} (limit {MAX_ALLOWED_DIFF:.1e})")
        reports.append(BenchReport(k=int(k), t=t, naive_seconds=naive_s,
                                   factorized_seconds=fact_s, max_abs_diff=diff))
    return reports
