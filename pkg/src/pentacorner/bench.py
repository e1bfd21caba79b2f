"""Timing rig for the determinant paths and the recurrence kernels.

Methodology: monotonic clock, one warm-up call excluded, median of the
requested repetitions reported.  Absolute numbers are hardware-dependent;
consumers should compare ratios (closed vs recurrence vs dense, compiled
kernel vs pure Python), not seconds.
"""

from __future__ import annotations

import math
import time

from . import closedform, recurrence
from .ma1 import Ma1Point, cumulant_L_n
from .matrices import build_dense_D
from .oracles import oracle_det
from .params import PentaParams

__all__ = ["time_ns_median", "bench_det_methods", "bench_kernels",
           "bench_cumulant", "DENSE_SIZE_CAP", "RECURRENCE_SIZE_CAP"]

# Dense elimination is O(n^3); beyond this it stops being a benchmark and
# starts being a coffee break.
DENSE_SIZE_CAP = 2000
RECURRENCE_SIZE_CAP = {"cython": 50_000_000, "python": 2_000_000}


def time_ns_median(fn, repetitions: int = 5, warmup: int = 1) -> int:
    for _ in range(warmup):
        fn()
    samples = []
    for _ in range(max(1, repetitions)):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    samples.sort()
    return samples[len(samples) // 2]


def _det_record(params: PentaParams, n: int, method: str, fn,
                repetitions: int) -> dict:
    value = fn().value
    ns = time_ns_median(fn, repetitions)
    mant, exp10 = value.mantissa_exp10()
    return {
        "n": n,
        "method": method,
        "median_ns": ns,
        "sign": value.sign,
        "log10_abs": value.log10_abs if value.sign else -math.inf,
        "mantissa": mant,
        "exp10": exp10,
    }


def bench_det_methods(params: PentaParams, sizes: list[int],
                      methods: list[str], repetitions: int = 5) -> list[dict]:
    """Per-size medians for the requested determinant methods."""
    records = []
    for n in sizes:
        for method in methods:
            if method == "closed":
                fn = lambda: closedform.det_D_closed(params, n)
            elif method == "recurrence":
                if n > RECURRENCE_SIZE_CAP[recurrence.BACKEND]:
                    continue
                fn = lambda: recurrence.det_D_recurrence(params, n)
            elif method == "dense":
                if n > DENSE_SIZE_CAP:
                    continue
                m = build_dense_D(params, n)
                fn = lambda: closedform.DetResult(oracle_det(m), "ORACLE")
            elif method == "eigen":
                if not params.corner_matches_band():
                    continue
                fn = lambda: closedform.det_D_eigenproduct(params, n)
            else:
                raise ValueError(f"unknown method {method!r}")
            records.append(_det_record(params, n, method, fn, repetitions))
    return records


def bench_kernels(params: PentaParams, sizes: list[int],
                  repetitions: int = 5) -> list[dict]:
    """Compiled vs pure-Python recurrence kernel on the same inputs."""
    records = []
    for name, kernel in recurrence.kernel_backends().items():
        for n in sizes:
            if n > RECURRENCE_SIZE_CAP[name]:
                continue
            fn = lambda: recurrence.det_D_recurrence(params, n, kernel=kernel)
            rec = _det_record(params, n, f"recurrence[{name}]", fn,
                              repetitions)
            rec["backend"] = name
            records.append(rec)
    return records


def bench_cumulant(phi: float, lambda1: float, lambda2: float,
                   sizes: list[int], repetitions: int = 5) -> list[dict]:
    """L_n values plus timings for a list of orders."""
    pt = Ma1Point(phi, lambda1, lambda2)
    records = []
    for n in sizes:
        fn = lambda: cumulant_L_n(pt, n)
        value = fn()
        records.append({
            "n": n,
            "method": "eigen",
            "median_ns": time_ns_median(fn, repetitions),
            "finite": value.finite,
            "L_n": value.value if value.finite else math.inf,
        })
    return records
