"""First-order moving-average application of the pentadiagonal toolkit.

For the centered Gaussian MA(1) process X_k = eps_k + phi eps_{k-1}, the
normalized cumulant generating function of (sum X_k^2, sum X_k X_{k-1})
reduces to -log(det(D_n)) / (2n) for a corner-perturbed pentadiagonal
matrix whose entries are explicit in (phi, lambda1, lambda2) and which
always satisfies r = p - s, so its eigenvalues are explicit as well.  The
n -> infinity limit has a closed form on an explicit domain; outside (and
on the closure of the zero-eigenvalue curve) the limit is +infinity.

Monte Carlo support: paths are generated from a counter-based uniform
stream (Philox, keyed by (seed, path index)) pushed through the inverse
normal CDF, so every path is addressable, reproducible, and shardable by
path range with order-independent merging.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import ndtri

from .definiteness import eigenvalues_closed_form
from .logscale import ConsistencyError
from .params import PentaParams

__all__ = [
    "Ma1Point",
    "CumulantValue",
    "LimitTerms",
    "EmpiricalCumulant",
    "induced_params",
    "spectral_density",
    "autocovariance",
    "cumulant_L_n",
    "in_domain_D1",
    "in_domain_D2",
    "d0_curve_point",
    "d0_scatter",
    "near_closure_D0",
    "limit_terms",
    "limit_L",
    "simulate_ma1",
    "empirical_cumulant",
]

EIG_POSITIVE_REL = 1e-12
D0_CLOSURE_TOL = 1e-10
D0_GRID_POINTS = 10_001
LIMIT_IMAG_TOL = 1e-10


@dataclass(frozen=True)
class Ma1Point:
    """Process parameter phi plus the cumulant arguments (lambda1, lambda2)."""

    phi: float
    lambda1: float
    lambda2: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in
                   (self.phi, self.lambda1, self.lambda2)):
            raise ValueError("fields must be finite")
        if abs(self.phi) >= 1.0:
            raise ValueError(f"|phi| < 1 required (invertibility), "
                             f"got {self.phi}")


@dataclass(frozen=True)
class CumulantValue:
    """A cumulant value that may be +infinity."""

    finite: bool
    value: float

    @classmethod
    def of(cls, v: float) -> "CumulantValue":
        return cls(True, v)

    @classmethod
    def infinite(cls) -> "CumulantValue":
        return cls(False, math.inf)


@dataclass(frozen=True)
class LimitTerms:
    """Factorization data (A, B) of the limit together with the induced
    (p, q, s)."""

    A: complex
    B: complex
    p: float
    q: float
    s: float


@dataclass(frozen=True)
class EmpiricalCumulant:
    value: float
    stderr: float
    replications: int
    batches: int


def induced_params(pt: Ma1Point) -> PentaParams:
    """The pentadiagonal entries induced by (phi, lambda1, lambda2).

    The identity r = p - s holds exactly by construction.
    """
    phi, l1, l2 = pt.phi, pt.lambda1, pt.lambda2
    one = 1 + phi * phi
    return PentaParams(
        p=1 - 2 * l1 * one - 2 * l2 * phi,
        q=-2 * l1 * phi - l2 * one,
        r=1 - 2 * l1 * one - l2 * phi,
        s=-l2 * phi,
    )


def spectral_density(phi: float, omega: float) -> float:
    """1 + phi^2 + 2 phi cos(omega); strictly positive for |phi| < 1."""
    if abs(phi) >= 1.0:
        raise ValueError("|phi| < 1 required")
    return 1 + phi * phi + 2 * phi * math.cos(omega)


def autocovariance(phi: float, k: int) -> float:
    """Fourier coefficients of the spectral density: MA(1) support {0, 1}."""
    if abs(phi) >= 1.0:
        raise ValueError("|phi| < 1 required")
    k = abs(int(k))
    if k == 0:
        return 1 + phi * phi
    if k == 1:
        return phi
    return 0.0


def cumulant_L_n(pt: Ma1Point, n: int) -> CumulantValue:
    """-log(det(D_n)) / (2 n), or +infinity if D_n is not positive definite.

    Evaluated through the explicit eigenvalues, which apply because the
    induced parameters always satisfy r = p - s.
    """
    if n < 2:
        raise ValueError(f"n >= 2 required, got {n}")
    params = induced_params(pt)
    alphas = eigenvalues_closed_form(params, n)
    if np.any(alphas <= EIG_POSITIVE_REL * params.scale):
        return CumulantValue.infinite()
    return CumulantValue.of(float(-np.sum(np.log(alphas)) / (2 * n)))


def in_domain_D1(pt: Ma1Point) -> bool:
    """First finite-limit region: in induced terms, p/6 <= s <= p/2 with
    q^2 <= 4 s (p - 2 s)."""
    phi, l1, l2 = pt.phi, pt.lambda1, pt.lambda2
    one = 1 + phi * phi
    if not (1 + 4 * l2 * phi) / (2 * one) <= l1 <= 1 / (2 * one):
        return False
    return (2 * l1 * phi + l2 * one) ** 2 <= -4 * l2 * phi * (1 - 2 * l1 * one)


def in_domain_D2(pt: Ma1Point) -> bool:
    """Second finite-limit region: -p/2 <= s < p/6 with the quadratic
    non-negative at both interval endpoints."""
    phi, l1, l2 = pt.phi, pt.lambda1, pt.lambda2
    one = 1 + phi * phi
    lp = l2 * phi
    if not (-1 + 2 * l1 * one) / 4 < lp <= (1 - 2 * l1 * one) / 4:
        return False
    return (l1 - 1 / (2 * (1 - phi) ** 2) <= l2
            <= 1 / (2 * (1 + phi) ** 2) - l1)


def d0_curve_point(phi: float, t: float) -> tuple[float, float]:
    """Point of the zero-eigenvalue curve at parameter t = cos(k pi/(n+1))."""
    h = 1 + phi * phi + 2 * phi * t
    return (1 + phi * phi + 4 * phi * t) / (2 * h * h), -phi / (h * h)


def d0_scatter(phi: float, n: int) -> np.ndarray:
    """The n curve samples at t = cos(k pi/(n+1)), k = 1..n; shape (n, 2)."""
    t = np.cos(np.arange(1, n + 1) * np.pi / (n + 1))
    h = 1 + phi * phi + 2 * phi * t
    return np.column_stack(((1 + phi * phi + 4 * phi * t) / (2 * h * h),
                            -phi / (h * h)))


def near_closure_D0(pt: Ma1Point, tol: float) -> bool:
    """Whether (lambda1, lambda2) is within tol of the closed curve
    {(l1(t), l2(t)) : t in [-1, 1]}.

    Grid scan plus a derivative root-find refinement; the curve's
    derivatives are closed-form (l1' = -4 phi^2 t / h^3, l2' = 4 phi^2 /
    h^3 with h = 1 + phi^2 + 2 phi t), so the refined distance is accurate
    to machine precision rather than to a minimizer's step tolerance.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    phi = pt.phi

    def dist2(u):
        x, y = d0_curve_point(phi, u)
        return (x - pt.lambda1) ** 2 + (y - pt.lambda2) ** 2

    def half_gradient(u):
        h = 1 + phi * phi + 2 * phi * u
        x, y = d0_curve_point(phi, u)
        dx = -4 * phi * phi * u / h ** 3
        dy = 4 * phi * phi / h ** 3
        return (x - pt.lambda1) * dx + (y - pt.lambda2) * dy

    t = np.linspace(-1.0, 1.0, D0_GRID_POINTS)
    h = 1 + phi * phi + 2 * phi * t
    d1 = (1 + phi * phi + 4 * phi * t) / (2 * h * h) - pt.lambda1
    d2 = -phi / (h * h) - pt.lambda2
    grid = d1 * d1 + d2 * d2
    i = int(np.argmin(grid))
    best = float(grid[i])
    lo = float(t[max(i - 1, 0)])
    hi = float(t[min(i + 1, len(t) - 1)])
    glo, ghi = half_gradient(lo), half_gradient(hi)
    if glo == 0.0:
        best = min(best, dist2(lo))
    elif ghi == 0.0:
        best = min(best, dist2(hi))
    elif (glo < 0) != (ghi < 0):
        root = brentq(half_gradient, lo, hi, xtol=1e-15)
        best = min(best, dist2(root))
    return math.sqrt(best) <= tol


def limit_terms(pt: Ma1Point) -> LimitTerms:
    """The factorization pair (A, B) entering the limit formula."""
    params = induced_params(pt)
    p, q, s = params.p, params.q, params.s
    root = cmath.sqrt(complex(q * q - 4 * s * (p - 2 * s)))
    denom = p - 2 * s
    return LimitTerms(A=(q - root) / denom, B=(q + root) / denom,
                      p=p, q=q, s=s)


def limit_L(pt: Ma1Point) -> CumulantValue:
    """Limit of the normalized cumulant as n -> infinity.

    Finite exactly on (D1 union D2) minus the closure of the
    zero-eigenvalue curve; the finite value is
    -log((p - 2s)(1 + sqrt(1 - A^2))(1 + sqrt(1 - B^2)) / 4) / 2.
    """
    if not (in_domain_D1(pt) or in_domain_D2(pt)):
        return CumulantValue.infinite()
    if near_closure_D0(pt, D0_CLOSURE_TOL):
        return CumulantValue.infinite()
    params = induced_params(pt)
    p, q, s = params.p, params.q, params.s
    a = p - 2 * s
    if abs(a) <= 1e-14 * params.scale:
        # Boundary sliver: membership forces q = 0 and s > 0 here, where
        # the integral collapses to -log(s)/2.
        return CumulantValue.of(-0.5 * math.log(s))
    lt = limit_terms(pt)
    prod = a * (1 + cmath.sqrt(1 - lt.A * lt.A)) \
        * (1 + cmath.sqrt(1 - lt.B * lt.B)) / 4
    if abs(prod.imag) > LIMIT_IMAG_TOL * (abs(prod) + 1.0):
        raise ConsistencyError(f"non-real limit argument {prod!r}")
    return CumulantValue.of(-0.5 * math.log(prod.real))


def _normal_path(seed: int, stream: int, count: int) -> np.ndarray:
    """Deterministic standard normals: Philox(key=(seed, stream)) uniforms
    through the inverse CDF."""
    gen = np.random.Generator(np.random.Philox(key=[seed, stream]))
    u = gen.random(count)
    np.clip(u, 1e-300, 1.0 - 1e-16, out=u)
    return ndtri(u)


def simulate_ma1(phi: float, n: int, seed: int) -> tuple[float, float]:
    """One seeded path: (U_n, V_n) = (sum_1^n X_k^2, sum_2^n X_k X_{k-1})."""
    if abs(phi) >= 1.0:
        raise ValueError("|phi| < 1 required")
    if n < 2:
        raise ValueError("n >= 2 required")
    eps = _normal_path(seed, 0, n + 1)
    x = eps[1:] + phi * eps[:-1]
    return float(np.dot(x, x)), float(np.dot(x[1:], x[:-1]))


def empirical_cumulant(pt: Ma1Point, n: int, replications: int,
                       seed: int, batches: int = 50) -> EmpiricalCumulant:
    """Monte Carlo estimate of the cumulant L_n with a batch-means stderr.

    Replication i consumes the stream keyed (seed, i), so shards over
    disjoint index ranges reproduce this result when merged in any order.
    Only sensible strictly inside the finite-cumulant region; the moment
    just does not exist outside it.
    """
    if n < 2 or replications < 4:
        raise ValueError("need n >= 2 and at least 4 replications")
    phi = pt.phi
    if abs(phi) >= 1.0:
        raise ValueError("|phi| < 1 required")
    exponents = np.empty(replications)
    for i in range(replications):
        eps = _normal_path(seed, i, n + 1)
        x = eps[1:] + phi * eps[:-1]
        exponents[i] = (pt.lambda1 * np.dot(x, x)
                        + pt.lambda2 * np.dot(x[1:], x[:-1]))
    if float(np.max(exponents)) > 700.0:
        raise OverflowError(
            "exp overflow in the cumulant average; use smaller |lambda| "
            "or smaller n")
    weights = np.exp(exponents)
    mean = float(np.mean(weights))
    nbatch = max(2, min(batches, replications // 2))
    batch_means = np.array([np.mean(chunk) for chunk in
                            np.array_split(weights, nbatch)])
    se_mean = float(np.std(batch_means, ddof=1) / math.sqrt(nbatch))
    return EmpiricalCumulant(value=math.log(mean) / n,
                             stderr=se_mean / (mean * n),
                             replications=replications, batches=nbatch)
