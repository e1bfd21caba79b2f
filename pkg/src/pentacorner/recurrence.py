"""O(n) determinants via the five-term minor recurrence.

det(E_n) satisfies a linear recurrence in n whose coefficients are built
from (p, q, s); det(D_n) is a fixed linear combination of the previous
five det(E) values.  When q = 0 the five-term relation degenerates and a
four-term variant applies instead (dispatched on |q| below 1e-14 times the
parameter scale).

The forward sweep is the one hot loop in the package.  A compiled kernel
(``pentacorner._recurrence_c``) is used when available, with a pure-Python
twin as fallback; both expose the same window functions and are compared
by the benchmark harness.
"""

from __future__ import annotations

import math

from .logscale import DetResult, LogScalar
from .matrices import build_dense_D
from .oracles import oracle_det
from .params import PentaParams

try:  # compiled hot loop, optional
    from . import _recurrence_c as _kernel

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _recurrence_py as _kernel

    BACKEND = "python"

from . import _recurrence_py

__all__ = [
    "BACKEND",
    "initial_conditions",
    "det_E_recurrence",
    "det_D_recurrence",
    "kernel_backends",
]

Q_ZERO_REL = 1e-14


def kernel_backends() -> dict:
    """Importable kernel modules keyed by backend name."""
    out = {"python": _recurrence_py}
    if BACKEND == "cython":
        out["cython"] = _kernel
    return out


def initial_conditions(params: PentaParams) -> tuple[float, float, float, float, float]:
    """The first five principal minors e_1..e_5 of E, as polynomials in
    (p, q, r, s)."""
    p, q, r, s = params.p, params.q, params.r, params.s
    e1 = r
    e2 = p * r - q * q
    e3 = p * p * r - q * q * (r - 2 * s) - p * (q * q + s * s)
    e4 = (p ** 3 * r - p * p * (q * q + s * s)
          - p * (2 * q * q * (r - s) + r * s * s)
          + q ** 4 + 2 * q * q * s * (r - s) + s ** 4)
    e5 = (p ** 4 * r + q ** 4 * (r - 4 * s) + r * s ** 4
          + 2 * q * q * s * s * (s - r) - p ** 3 * (q * q + s * s)
          + p * (2 * q ** 4 + 4 * q * q * r * s + s ** 4)
          + p * p * (-2 * r * s * s + q * q * (2 * s - 3 * r)))
    return e1, e2, e3, e4, e5


def _is_q_zero(params: PentaParams) -> bool:
    return abs(params.q) <= Q_ZERO_REL * params.scale


def _scaled(value: float, log_scale: float) -> LogScalar:
    if value == 0.0:
        return LogScalar.zero()
    return LogScalar(1 if value > 0 else -1, math.log(abs(value)) + log_scale)


def det_E_recurrence(params: PentaParams, n: int,
                     kernel=None) -> DetResult:
    """det(E_n) by the forward recurrence; exact branch choice on q."""
    if n < 1:
        raise ValueError(f"E requires n >= 1, got {n}")
    k = kernel if kernel is not None else _kernel
    if _is_q_zero(params):
        p, r, s = params.p, params.r, params.s
        if n <= 4:
            e = (r, p * r, p * (p * r - s * s),
                 (p * p - s * s) * (p * r - s * s))[n - 1]
            return DetResult(LogScalar.from_float(e), "RECURRENCE")
        *_, en, acc = k.minor_window_qzero(p, r, s, n)
        return DetResult(_scaled(en, acc), "RECURRENCE")
    if n <= 5:
        e = initial_conditions(params)[n - 1]
        return DetResult(LogScalar.from_float(e), "RECURRENCE")
    *_, en, acc = k.minor_window(params.p, params.q, params.r, params.s, n)
    return DetResult(_scaled(en, acc), "RECURRENCE")


def det_D_recurrence(params: PentaParams, n: int,
                     kernel=None) -> DetResult:
    """det(D_n): one corner-corrected step on top of the E recurrence.

    Small orders (n <= 5 for q != 0, n <= 4 for q = 0) fall back to the
    dense oracle, where the recurrence has no base yet.
    """
    if n < 3:
        raise ValueError(f"D requires n >= 3, got {n}")
    p, q, r, s = params.p, params.q, params.r, params.s
    k = kernel if kernel is not None else _kernel
    if _is_q_zero(params):
        if n <= 4:
            value = oracle_det(build_dense_D(params, n))
            return DetResult(value, "RECURRENCE")
        w1, w2, w3, w4, acc = k.minor_window_qzero(p, r, s, n - 1)
        dn = r * w4 - p * s * s * w2 + s ** 4 * w1
        return DetResult(_scaled(dn, acc), "RECURRENCE")
    if n <= 5:
        value = oracle_det(build_dense_D(params, n))
        return DetResult(value, "RECURRENCE")
    w1, w2, w3, w4, w5, acc = k.minor_window(p, q, r, s, n - 1)
    dn = ((r - s) * w5 + (p * s - q * q) * (w4 - s * w3)
          + s ** 3 * (s - p) * w2 + s ** 5 * w1)
    return DetResult(_scaled(dn, acc), "RECURRENCE")
