"""Command-line front end.

Every command prints one structured record per line (JSON by default,
``--csv`` for comma-separated with a header).  Numeric fields use the
shortest round-tripping decimal representation, so parse/re-serialize is
lossless.  Exit codes: 0 success, 2 input error, 3 internal consistency
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

import numpy as np

from . import bench, closedform, definiteness, ma1, recurrence
from .logscale import ConsistencyError, LogScalar
from .matrices import build_dense_D
from .oracles import oracle_det
from .params import PentaParams

__all__ = ["main"]

# Dense determinants beyond this order are refused at the CLI (O(n^3)).
ORACLE_SIZE_LIMIT = 4000


def _logscalar_fields(v: LogScalar) -> dict:
    mant, exp10 = v.mantissa_exp10()
    return {
        "sign": v.sign,
        "log_abs": v.log_abs,
        "log10_abs": v.log10_abs,
        "mantissa": mant,
        "exp10": exp10,
        "value": v.to_float() if (v.sign == 0 or v.log_abs < 709) else None,
    }


def _record(command: str, inputs: dict, outputs: dict, method=None,
            case_id=None, wall_time_ns=None) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "method": method,
        "case_id": case_id,
        "wall_time_ns": wall_time_ns,
    }


def _flatten(rec: dict, prefix: str = "") -> dict:
    out = {}
    for key, val in rec.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            out.update(_flatten(val, f"{name}."))
        else:
            out[name] = val
    return out


def _emit(records: list[dict], as_csv: bool, stream=None):
    stream = stream or sys.stdout
    if not as_csv:
        for rec in records:
            stream.write(json.dumps(rec) + "\n")
        return
    if not records:
        return
    flat = [_flatten(r) for r in records]
    fields: list[str] = []
    for row in flat:
        for key in row:
            if key not in fields:
                fields.append(key)
    writer = csv.DictWriter(stream, fieldnames=fields, restval="")
    writer.writeheader()
    for row in flat:
        writer.writerow(row)


def _params_from(args) -> PentaParams:
    return PentaParams(p=args.p, q=args.q, r=args.r, s=args.s)


def _det_one(params: PentaParams, n: int, method: str) -> tuple[dict, str | None]:
    if method == "closed":
        res = closedform.det_D_closed(params, n)
        return _logscalar_fields(res.value), res.case_id
    if method == "recurrence":
        return _logscalar_fields(recurrence.det_D_recurrence(params, n).value), None
    if method == "eigen":
        if not params.corner_matches_band():
            raise ValueError("--method eigen requires r = p - s")
        return _logscalar_fields(closedform.det_D_eigenproduct(params, n).value), None
    if method == "oracle":
        if n > ORACLE_SIZE_LIMIT:
            raise ValueError(f"--method oracle is capped at n <= {ORACLE_SIZE_LIMIT}")
        return _logscalar_fields(oracle_det(build_dense_D(params, n))), None
    raise ValueError(f"unknown method {method!r}")


def _cmd_det(args) -> list[dict]:
    params = _params_from(args)
    inputs = {"p": params.p, "q": params.q, "r": params.r, "s": params.s,
              "n": args.n, "method": args.method}
    t0 = time.perf_counter_ns()
    if args.method != "all":
        outputs, case_id = _det_one(params, args.n, args.method)
        return [_record("det", inputs, outputs, args.method, case_id,
                        time.perf_counter_ns() - t0)]
    methods = ["closed", "recurrence"]
    if params.corner_matches_band():
        methods.append("eigen")
    if args.n <= bench.DENSE_SIZE_CAP:
        methods.append("oracle")
    outputs = {}
    case_id = None
    values = {}
    for method in methods:
        fields, cid = _det_one(params, args.n, method)
        case_id = case_id or cid
        outputs[method] = fields
        values[method] = LogScalar(fields["sign"], fields["log_abs"])
    discrepancy = 0.0
    names = list(values)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            va, vb = values[a], values[b]
            if va.sign != vb.sign:
                discrepancy = math.inf
            elif va.sign != 0:
                discrepancy = max(discrepancy, abs(va.log_abs - vb.log_abs))
    outputs["max_log_discrepancy"] = discrepancy
    return [_record("det", inputs, outputs, "all", case_id,
                    time.perf_counter_ns() - t0)]


def _cmd_classify(args) -> list[dict]:
    params = _params_from(args)
    inputs = {"p": params.p, "q": params.q, "r": params.r, "s": params.s}
    t0 = time.perf_counter_ns()
    report = definiteness.is_nonneg_all_n(params)
    outputs = {
        "region": report.region.tag,
        "nonneg_all_n": report.nonneg_all_n,
        "requires_r_ge_p_minus_s": report.requires_r_ge_p_minus_s,
    }
    if params.corner_matches_band():
        strict = definiteness.is_positive_all_n(params, n_max=args.n_max)
        outputs["positive_all_n"] = strict.positive_all_n
        outputs["region"] = strict.region.tag
        if strict.region.witness is not None:
            k, n = strict.region.witness
            outputs["d0_witness_k"] = k
            outputs["d0_witness_n"] = n
    else:
        outputs["positive_all_n"] = None
    return [_record("classify", inputs, outputs, "region",
                    None, time.perf_counter_ns() - t0)]


def _cmd_ma1(args) -> list[dict]:
    pt = ma1.Ma1Point(args.phi, args.l1, args.l2)
    params = ma1.induced_params(pt)
    inputs = {"phi": pt.phi, "lambda1": pt.lambda1, "lambda2": pt.lambda2,
              "n": args.n}
    t0 = time.perf_counter_ns()
    outputs = {"p": params.p, "q": params.q, "r": params.r, "s": params.s}
    if args.n is None:
        lim = ma1.limit_L(pt)
        outputs.update({
            "in_domain_D1": ma1.in_domain_D1(pt),
            "in_domain_D2": ma1.in_domain_D2(pt),
            "near_closure_D0": ma1.near_closure_D0(pt, 1e-10),
            "finite": lim.finite,
            "limit_L": lim.value if lim.finite else None,
        })
        method = "limit"
    else:
        val = ma1.cumulant_L_n(pt, args.n)
        outputs.update({"finite": val.finite,
                        "L_n": val.value if val.finite else None})
        method = "eigen"
    return [_record("ma1", inputs, outputs, method, None,
                    time.perf_counter_ns() - t0)]


def _cmd_bench(args) -> list[dict]:
    t0 = time.perf_counter_ns()
    records = []
    if args.table == 2:
        sizes = args.sizes or [5, 10, 50, 100, 500]
        inputs = {"table": 2, "phi": args.phi, "lambda1": args.l1,
                  "lambda2": args.l2, "sizes": sizes, "reps": args.reps}
        for row in bench.bench_cumulant(args.phi, args.l1, args.l2, sizes,
                                        args.reps):
            records.append(_record("bench", inputs, row, row["method"],
                                   None, time.perf_counter_ns() - t0))
        return records
    params = _params_from(args)
    sizes = args.sizes or [5, 5_000_000, 50_000_000, 500_000_000]
    if any(n < 3 for n in sizes):
        raise ValueError("bench sizes must be >= 3")
    inputs = {"table": 1, "p": params.p, "q": params.q, "r": params.r,
              "s": params.s, "sizes": sizes, "reps": args.reps,
              "kernel_backend": recurrence.BACKEND}
    methods = args.methods.split(",") if args.methods else \
        ["closed", "recurrence", "dense"]
    for row in bench.bench_det_methods(params, sizes, methods, args.reps):
        records.append(_record("bench", inputs, row, row["method"],
                               None, time.perf_counter_ns() - t0))
    if args.compare_kernels:
        for row in bench.bench_kernels(params, sizes, args.reps):
            records.append(_record("bench", inputs, row, row["method"],
                                   None, time.perf_counter_ns() - t0))
    return records


def _cmd_domain(args) -> list[dict]:
    t0 = time.perf_counter_ns()
    records = []
    if args.fig1:
        if args.p is None:
            raise ValueError("--fig1 requires --p")
        inputs = {"mode": "fig1", "p": args.p,
                  "s_range": [args.s_min, args.s_max],
                  "q_range": [args.q_min, args.q_max],
                  "steps": args.steps}
        for s in np.linspace(args.s_min, args.s_max, args.steps):
            for q in np.linspace(args.q_min, args.q_max, args.steps):
                params = PentaParams(p=args.p, q=float(q),
                                     r=args.p - float(s), s=float(s))
                tag = definiteness.classify_region(params).tag
                records.append(_record(
                    "domain", inputs,
                    {"s": float(s), "q": float(q), "region": tag,
                     "member": tag != "OUTSIDE"},
                    "region", None, time.perf_counter_ns() - t0))
        return records
    inputs = {"mode": "lambda", "phi": args.phi,
              "l1_range": [args.l1_min, args.l1_max],
              "l2_range": [args.l2_min, args.l2_max],
              "steps": args.steps, "d0_n": args.d0_n}
    if args.steps > 0:
        for l1 in np.linspace(args.l1_min, args.l1_max, args.steps):
            for l2 in np.linspace(args.l2_min, args.l2_max, args.steps):
                pt = ma1.Ma1Point(args.phi, float(l1), float(l2))
                d1 = ma1.in_domain_D1(pt)
                d2 = ma1.in_domain_D2(pt)
                records.append(_record(
                    "domain", inputs,
                    {"lambda1": float(l1), "lambda2": float(l2),
                     "in_D1": d1, "in_D2": d2, "member": d1 or d2},
                    "membership", None, time.perf_counter_ns() - t0))
    if args.d0_n:
        for k, (l1, l2) in enumerate(ma1.d0_scatter(args.phi, args.d0_n),
                                     start=1):
            records.append(_record(
                "domain", inputs,
                {"k": k, "n": args.d0_n, "lambda1": float(l1),
                 "lambda2": float(l2)},
                "d0_curve", None, time.perf_counter_ns() - t0))
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentacorner",
        description="Determinants, definiteness and MA(1) cumulants of "
                    "corner-perturbed pentadiagonal matrices.")
    parser.add_argument("--csv", action="store_true",
                        help="emit CSV instead of JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(sp):
        sp.add_argument("--p", type=float, required=True)
        sp.add_argument("--q", type=float, required=True)
        sp.add_argument("--r", type=float, required=True)
        sp.add_argument("--s", type=float, required=True)

    sp = sub.add_parser("det", help="determinant of the two-corner matrix")
    add_params(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", default="all",
                    choices=["closed", "recurrence", "eigen", "oracle", "all"])
    sp.set_defaults(func=_cmd_det)

    sp = sub.add_parser("classify", help="definiteness classification")
    add_params(sp)
    sp.add_argument("--n-max", type=int, default=10 ** 6,
                    help="denominator bound for the zero-eigenvalue scan")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("ma1", help="MA(1) cumulant L_n or its limit")
    sp.add_argument("--phi", type=float, required=True)
    sp.add_argument("--l1", type=float, required=True)
    sp.add_argument("--l2", type=float, required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.set_defaults(func=_cmd_ma1)

    sp = sub.add_parser("bench", help="timing and value tables")
    sp.add_argument("--table", type=int, choices=[1, 2], default=1)
    sp.add_argument("--sizes", type=int, nargs="*", default=None)
    sp.add_argument("--reps", type=int, default=5)
    sp.add_argument("--methods", default=None,
                    help="comma list among closed,recurrence,dense,eigen")
    sp.add_argument("--compare-kernels", action="store_true",
                    help="also time the pure-Python kernel against the "
                         "compiled one")
    sp.add_argument("--p", type=float, default=5.0)
    sp.add_argument("--q", type=float, default=-1.0)
    sp.add_argument("--r", type=float, default=1.0)
    sp.add_argument("--s", type=float, default=2.0)
    sp.add_argument("--phi", type=float, default=1 / 3)
    sp.add_argument("--l1", type=float, default=-1.0)
    sp.add_argument("--l2", type=float, default=-1.0)
    sp.set_defaults(func=_cmd_bench)

    sp = sub.add_parser("domain", help="membership grids and the "
                                       "zero-eigenvalue curve")
    sp.add_argument("--phi", type=float, default=1 / 3)
    sp.add_argument("--l1-min", type=float, default=-2.0)
    sp.add_argument("--l1-max", type=float, default=0.5)
    sp.add_argument("--l2-min", type=float, default=-3.0)
    sp.add_argument("--l2-max", type=float, default=2.0)
    sp.add_argument("--steps", type=int, default=0)
    sp.add_argument("--d0-n", type=int, default=0)
    sp.add_argument("--fig1", action="store_true")
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--s-min", type=float, default=-800.0)
    sp.add_argument("--s-max", type=float, default=800.0)
    sp.add_argument("--q-min", type=float, default=-800.0)
    sp.add_argument("--q-max", type=float, default=800.0)
    sp.set_defaults(func=_cmd_domain)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records = args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    _emit(records, args.csv)
    return 0


if __name__ == "__main__":
    sys.exit(main())
