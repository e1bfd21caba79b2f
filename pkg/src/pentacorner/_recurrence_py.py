"""Pure-Python recurrence kernel (fallback for the compiled extension).

Runs the five-term minor recurrence (four-term when q = 0) forward with
magnitude-triggered rescaling: whenever the window leaves [1e-100, 1e100]
the common factor is moved into a log accumulator, so the raw window stays
inside double range while the true values grow to 10**(10**8) scale.

Both kernel modules expose the same two functions; ``recurrence`` picks
whichever importable one is fastest at import time.
"""

from __future__ import annotations

import math

BIG = 1e100
SMALL = 1e-100


def minor_window(p: float, q: float, r: float, s: float,
                 n: int) -> tuple[float, float, float, float, float, float]:
    """Scaled (e_{n-4}, ..., e_n) plus log of the factored-out scale, n >= 5."""
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
    acc = 0.0
    c1 = p - s
    c2 = p * s - q * q
    c3 = -s * c2
    c4 = s ** 3 * (s - p)
    c5 = s ** 5
    for _ in range(6, n + 1):
        w = c1 * e5 + c2 * e4 + c3 * e3 + c4 * e2 + c5 * e1
        e1, e2, e3, e4, e5 = e2, e3, e4, e5, w
        m = max(abs(e1), abs(e2), abs(e3), abs(e4), abs(e5))
        if m > BIG or (0.0 < m < SMALL):
            acc += math.log(m)
            inv = 1.0 / m
            e1 *= inv
            e2 *= inv
            e3 *= inv
            e4 *= inv
            e5 *= inv
    return e1, e2, e3, e4, e5, acc


def minor_window_qzero(p: float, r: float, s: float,
                       n: int) -> tuple[float, float, float, float, float]:
    """Scaled (e_{n-3}, ..., e_n) plus log scale for the q = 0 branch, n >= 4."""
    e1 = r
    e2 = p * r
    e3 = p * (p * r - s * s)
    e4 = (p * p - s * s) * (p * r - s * s)
    acc = 0.0
    c3 = -p * s * s
    c4 = s ** 4
    for _ in range(5, n + 1):
        w = p * e4 + c3 * e2 + c4 * e1
        e1, e2, e3, e4 = e2, e3, e4, w
        m = max(abs(e1), abs(e2), abs(e3), abs(e4))
        if m > BIG or (0.0 < m < SMALL):
            acc += math.log(m)
            inv = 1.0 / m
            e1 *= inv
            e2 *= inv
            e3 *= inv
            e4 *= inv
    return e1, e2, e3, e4, acc
