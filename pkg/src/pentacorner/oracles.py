"""Brute-force oracles: determinant, inertia and eigenvalues of dense
symmetric matrices.

These are deliberately independent of every closed form in the package;
they exist so the closed forms have something honest to be tested against.
The determinant runs row-pivoted elimination in sign/log space, inertia
uses an LDL^T sweep (Sylvester's law), and eigenvalues come from bisection
on inertia counts inside Gershgorin bounds.  A separate exact-rational
cofactor expansion anchors the floating-point determinant for small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .logscale import LogScalar

__all__ = [
    "Inertia",
    "oracle_det",
    "oracle_inertia",
    "oracle_eigenvalues",
    "cofactor_det_exact",
]

# Pivot-column magnitudes below DET_ZERO_REL times the matrix inf-norm are
# treated as an exactly singular matrix.
DET_ZERO_REL = 1e-12
# LDL^T pivots below INERTIA_ZERO_REL times the matrix inf-norm count as
# zero eigenvalues (exact only for well-separated spectra).
INERTIA_ZERO_REL = 1e-10


@dataclass(frozen=True)
class Inertia:
    """Eigenvalue sign counts of a symmetric matrix."""

    n_pos: int
    n_neg: int
    n_zero: int

    def __post_init__(self):
        if min(self.n_pos, self.n_neg, self.n_zero) < 0:
            raise ValueError("counts must be non-negative")

    @property
    def order(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero


def _inf_norm(m: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(m), axis=1))) if m.size else 0.0


def oracle_det(m: np.ndarray) -> LogScalar:
    """Determinant by partial-pivoted elimination, in sign/log form."""
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    tol = DET_ZERO_REL * _inf_norm(a)
    sign = 1
    log_abs = 0.0
    for k in range(n):
        col = np.abs(a[k:, k])
        piv = int(np.argmax(col))
        if col[piv] <= tol:
            return LogScalar.zero()
        if piv != 0:
            a[[k, k + piv]] = a[[k + piv, k]]
            sign = -sign
        d = a[k, k]
        if d < 0:
            sign = -sign
        log_abs += math.log(abs(d))
        if k + 1 < n:
            a[k + 1:, k:] -= np.outer(a[k + 1:, k] / d, a[k, k:])
    return LogScalar(sign, log_abs)


def oracle_inertia(m: np.ndarray, shift: float = 0.0) -> Inertia:
    """Counts of eigenvalues of ``m - shift*I`` below/at/above zero.

    Symmetric elimination without pivoting; pivots within tolerance of
    zero are counted as zero eigenvalues and nudged so the sweep can
    continue.  Counts are exact when no eigenvalue sits near the shift.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    tol = INERTIA_ZERO_REL * max(_inf_norm(a), abs(shift), 1e-300)
    a[np.diag_indices(n)] -= shift
    n_pos = n_neg = n_zero = 0
    for k in range(n):
        d = a[k, k]
        if abs(d) <= tol:
            n_zero += 1
            d = tol  # keep eliminating; fine unless spectra cluster at shift
        elif d > 0:
            n_pos += 1
        else:
            n_neg += 1
        if k + 1 < n:
            v = a[k + 1:, k]
            a[k + 1:, k + 1:] -= np.outer(v / d, v)
    return Inertia(n_pos, n_neg, n_zero)


def _gershgorin(m: np.ndarray) -> tuple[float, float]:
    radii = np.sum(np.abs(m), axis=1) - np.abs(np.diag(m))
    return (float(np.min(np.diag(m) - radii)),
            float(np.max(np.diag(m) + radii)))


def oracle_eigenvalues(m: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """All eigenvalues, ascending, each bracketed to width <= tol.

    Bisection on the count of eigenvalues below a shift.  O(n^3 log) and
    proudly so: it only ever needs to certify small matrices.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m, dtype=float)
    n = a.shape[0]
    lo0, hi0 = _gershgorin(a)
    lo0 -= 1.0
    hi0 += 1.0

    def count_below(x: float) -> int:
        ine = oracle_inertia(a, x)
        return ine.n_neg

    out = np.empty(n)
    for k in range(1, n + 1):
        lo, hi = lo0, hi0
        # invariant: count_below(lo) < k <= count_below(hi)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if count_below(mid) >= k:
                hi = mid
            else:
                lo = mid
        out[k - 1] = 0.5 * (lo + hi)
    return out


def cofactor_det_exact(m) -> Fraction:
    """Exact determinant by first-row cofactor expansion over Fractions.

    Intended for n <= 12 with rational entries; memoization on column
    masks keeps the banded case well below factorial cost.
    """
    rows = [[Fraction(v) for v in row] for row in m]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("square matrix required")
    full = (1 << n) - 1
    cache: dict[tuple[int, int], Fraction] = {}

    def minor(i: int, mask: int) -> Fraction:
        if mask == 0:
            return Fraction(1)
        key = (i, mask)
        got = cache.get(key)
        if got is not None:
            return got
        acc = Fraction(0)
        sign = 1
        rest = mask
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            v = rows[i][j]
            if v:
                acc += sign * v * minor(i + 1, mask & ~(1 << j))
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, full)
