"""Dense builders for the corner-perturbed pentadiagonal matrices.

``build_dense_D`` perturbs both corners; ``build_dense_E`` only the top-left
one.  For n = 3 the (1,3) position of D coincides with the second
superdiagonal, so no special corner handling is needed there: the band
value s already sits in that slot.
"""

from __future__ import annotations

import numpy as np

from .params import PentaParams

__all__ = ["build_dense_D", "build_dense_E", "band_validate"]


def _banded(params: PentaParams, n: int) -> np.ndarray:
    m = np.zeros((n, n))
    idx = np.arange(n)
    m[idx, idx] = params.p
    if n >= 2:
        m[idx[:-1], idx[1:]] = params.q
        m[idx[1:], idx[:-1]] = params.q
    if n >= 3:
        m[idx[:-2], idx[2:]] = params.s
        m[idx[2:], idx[:-2]] = params.s
    return m


def build_dense_D(params: PentaParams, n: int) -> np.ndarray:
    """Dense n x n matrix with both corner diagonal entries set to r."""
    if n < 3:
        raise ValueError(f"D is only defined for n >= 3, got n={n}")
    m = _banded(params, n)
    m[0, 0] = params.r
    m[n - 1, n - 1] = params.r
    return m


def build_dense_E(params: PentaParams, n: int) -> np.ndarray:
    """Dense n x n matrix with only the (1,1) entry set to r."""
    if n < 1:
        raise ValueError(f"E is only defined for n >= 1, got n={n}")
    m = _banded(params, n)
    m[0, 0] = params.r
    return m


def band_validate(m: np.ndarray) -> bool:
    """Check symmetry and the bandwidth-2 sparsity pattern."""
    n = m.shape[0]
    if m.shape != (n, n) or not np.array_equal(m, m.T):
        return False
    i, j = np.indices((n, n))
    return bool(np.all(m[np.abs(i - j) > 2] == 0.0))
