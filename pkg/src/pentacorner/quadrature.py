"""The log-trigonometric integral in closed form, plus a numeric oracle.

integral(0, pi) of log(a + b cos w + c cos^2 w) dw has an explicit value
whenever the quadratic a + b x + c x**2 is non-negative on [-1, 1]: factor
it as a (1 + g1 cos)(1 + g2 cos) and apply the classical evaluation of
integral log(1 + z cos).  The numeric side wraps an adaptive Gauss-Kronrod
integrator so the closed form (and the cumulant limit built on it) can be
validated against something that knows nothing about the factorization.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy import integrate

from .logscale import ConsistencyError

__all__ = ["LogCosParams", "log_integral_closed", "quad_oracle",
           "QuadratureError"]

# Allowed dip below zero of the quadratic on [-1,1]; pure roundoff slack.
HYPOTHESIS_SLACK = -1e-12
# a below this (relative to |b|, |c|) selects the a = 0 branch.
A_ZERO_REL = 1e-14
IMAG_TOL = 1e-10


class QuadratureError(RuntimeError):
    """The adaptive integrator could not reach the requested tolerance."""


@dataclass(frozen=True)
class LogCosParams:
    """Coefficients of the quadratic under the log, validated on [-1, 1]."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.min_on_interval() < HYPOTHESIS_SLACK * self.scale:
            raise ValueError(
                "a + b x + c x^2 must be non-negative on [-1, 1]; "
                f"minimum is {self.min_on_interval():.3e}")

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.a), abs(self.b), abs(self.c))

    def min_on_interval(self) -> float:
        """Exact minimum of a + b x + c x**2 over [-1, 1]."""
        a, b, c = self.a, self.b, self.c
        vals = [a + b + c, a - b + c]
        if c != 0.0:
            vertex = -b / (2 * c)
            if -1.0 < vertex < 1.0:
                vals.append(a + b * vertex + c * vertex * vertex)
        return min(vals)

    def factor_roots(self) -> tuple[complex, complex]:
        """(g1, g2) with a + b x + c x^2 = a (1 + g1 x)(1 + g2 x)."""
        a, b, c = self.a, self.b, self.c
        w = cmath.sqrt(complex(b * b - 4 * a * c))
        return (b - w) / (2 * a), (b + w) / (2 * a)


def log_integral_closed(p: LogCosParams) -> float:
    """integral(0, pi) log(a + b cos w + c cos^2 w) dw, exactly.

    Two branches: a = b = 0 gives pi log(c/4); otherwise a > 0 and the
    factored form applies.  a = 0 with b != 0 is rejected (the hypothesis
    would force b = 0 anyway).
    """
    a, b, c = p.a, p.b, p.c
    tol = A_ZERO_REL * p.scale
    if abs(a) <= tol:
        if abs(b) > tol:
            raise ValueError("a = 0 requires b = 0 for a non-negative "
                             "quadratic on [-1, 1]")
        if c <= 0:
            raise ValueError("a = b = 0 requires c > 0")
        return math.pi * math.log(c / 4.0)
    g1, g2 = p.factor_roots()
    f1 = 1.0 + cmath.sqrt(1.0 - g1 * g1)
    f2 = 1.0 + cmath.sqrt(1.0 - g2 * g2)
    prod = f1 * f2
    both_outside = (abs(g1.imag) <= 1e-14 and abs(g2.imag) <= 1e-14
                    and g1.real ** 2 > 1.0 and g2.real ** 2 > 1.0)
    if not both_outside and abs(prod.imag) > IMAG_TOL * (abs(prod) + 1.0):
        raise ConsistencyError(
            f"non-real factor product {prod!r} for admissible coefficients")
    # |1 + sqrt(1 - g^2)| is the right magnitude in every admissible case,
    # including a double root inside (-1, 1) where each factor alone is
    # genuinely complex but the integral is still real.
    return math.pi * (math.log(a) + math.log(abs(f1)) + math.log(abs(f2))
                      - math.log(4.0))


def quad_oracle(f, lo: float, hi: float, tol: float = 1e-10,
                singular_points=None) -> float:
    """Adaptive numeric integral of f on [lo, hi] to absolute accuracy tol.

    Backed by an adaptive Gauss-Kronrod scheme that subdivides toward
    integrable (logarithmic) singularities; known singular abscissae can
    be passed to guide the subdivision.  Raises QuadratureError if the
    error estimate does not reach tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    points = None
    if singular_points:
        points = [x for x in singular_points if lo < x < hi]
    value, err = integrate.quad(f, lo, hi, epsabs=0.1 * tol, epsrel=0.0,
                                limit=500, points=points or None)
    if err > tol:
        raise QuadratureError(
            f"integral did not converge: error estimate {err:.3e} > {tol:.1e}")
    return value
