"""Definiteness classification for the corner-perturbed family.

The matrix is non-negative definite for every order when (p, q, s) lies in
an explicit union of four regions of parameter space (given r >= p - s and
p >= 0); the regions express that the quadratic g(x) = s x**2 + q x +
(p - 2 s) is non-negative on [-2, 2].  This is a sufficient condition only:
membership failure never proves indefiniteness here (that takes an inertia
witness at some order).

On the slice r = p - s the eigenvalues are explicit, alpha_{n,k} =
g(2 cos(k pi / (n+1))), which yields a null-eigenvalue test and a strict
positive-definiteness classification with a well-defined exception set: a
zero eigenvalue occurs exactly when s > 0, q**2 = 4 s (p - 2 s) and
-q/(4 s) equals cos(k pi / (n+1)) for integers 1 <= k <= n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import PentaParams

__all__ = [
    "RegionLabel",
    "DefinitenessReport",
    "g_poly",
    "classify_region",
    "is_nonneg_all_n",
    "eigenvalues_closed_form",
    "null_eigenvalue_witness",
    "is_positive_all_n",
]

# Equality gates (r = p - s, q**2 = 4 s (p - 2 s)) that select which exact
# branch of the theory applies.
DEGENERATE_REL = 1e-10
CORNER_REL = 1e-12
NULL_EIG_REL = 1e-10
# |arccos(t)/pi - k/(n+1)| tolerance for flagging the zero-eigenvalue set.
RATIONAL_ANGLE_TOL = 1e-9
DEFAULT_N_MAX = 10 ** 6


@dataclass(frozen=True)
class RegionLabel:
    """Region tag (D1..D4, D0, OUTSIDE) with an optional (k, n) witness."""

    tag: str
    witness: tuple[int, int] | None = None

    def __post_init__(self):
        if self.tag not in ("D1", "D2", "D3", "D4", "D0", "OUTSIDE"):
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.witness is not None:
            k, n = self.witness
            if self.tag != "D0" or not 1 <= k <= n:
                raise ValueError("witness only valid for D0 with 1 <= k <= n")


@dataclass(frozen=True)
class DefinitenessReport:
    nonneg_all_n: bool
    positive_all_n: bool
    region: RegionLabel
    requires_r_ge_p_minus_s: bool

    def __post_init__(self):
        if self.positive_all_n and not self.nonneg_all_n:
            raise ValueError("positive definite implies non-negative definite")


def g_poly(params: PentaParams, x: float) -> float:
    """The definiteness quadratic s x**2 + q x + (p - 2 s)."""
    return params.s * x * x + params.q * x + (params.p - 2 * params.s)


def classify_region(params: PentaParams) -> RegionLabel:
    """Membership in the non-negative-definiteness regions D1..D4.

    Only (p, q, s) matter here; the corner r enters separately.  Requires
    p >= 0 (the classification is not defined below it).  Tested in the
    order D2 (s = 0), D1 (s < 0), then D3 and D4 (s > 0).  The closed
    (weak) inequalities get roundoff slack so that boundary points, such
    as the zero-eigenvalue set inside D3, classify as members.
    """
    p, q, s = params.p, params.q, params.s
    if p < 0:
        raise ValueError("region classification requires p >= 0")
    eps = 1e-12 * params.scale
    epsq = 1e-12 * params.scale ** 2
    if abs(s) <= 1e-14 * params.scale:
        if p - 2 * abs(q) >= -eps:
            return RegionLabel("D2")
        return RegionLabel("OUTSIDE")
    if s < 0:
        if s >= -p / 2 - eps and abs(q) <= (p + 2 * s) / 2 + eps:
            return RegionLabel("D1")
        return RegionLabel("OUTSIDE")
    disc = 4 * s * (p - 2 * s)
    if s <= p / 2 + eps and q * q <= disc + epsq:
        return RegionLabel("D3")
    if s < p / 6 and disc < q * q and abs(q) <= (p + 2 * s) / 2 + eps:
        return RegionLabel("D4")
    return RegionLabel("OUTSIDE")


def is_nonneg_all_n(params: PentaParams) -> DefinitenessReport:
    """Sufficient test for non-negative definiteness at every order.

    True requires both r >= p - s and region membership; a False report
    makes no claim in the other direction.
    """
    region = classify_region(params)
    corner_ok = params.r >= params.p - params.s
    nonneg = corner_ok and region.tag != "OUTSIDE"
    return DefinitenessReport(nonneg_all_n=nonneg, positive_all_n=False,
                              region=region,
                              requires_r_ge_p_minus_s=corner_ok)


def _require_corner_slice(params: PentaParams):
    if not params.corner_matches_band(CORNER_REL):
        raise ValueError(
            "explicit eigenvalues require r = p - s; got "
            f"r={params.r!r}, p-s={params.p - params.s!r}")


def eigenvalues_closed_form(params: PentaParams, n: int) -> np.ndarray:
    """Eigenvalues 4s cos^2(k pi/(n+1)) + 2q cos(k pi/(n+1)) + p - 2s.

    Returned in index order k = 1..n (not sorted).  Only valid on the
    slice r = p - s, which is checked.
    """
    _require_corner_slice(params)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    k = np.arange(1, n + 1)
    c = np.cos(k * np.pi / (n + 1))
    return 4 * params.s * c * c + 2 * params.q * c + (params.p - 2 * params.s)


def null_eigenvalue_witness(params: PentaParams, n: int) -> int | None:
    """Smallest k with alpha_{n,k} = 0 (within tolerance), or None."""
    alphas = eigenvalues_closed_form(params, n)
    tol = NULL_EIG_REL * max(1.0, abs(params.p), abs(params.q),
                             abs(params.s))
    hits = np.nonzero(np.abs(alphas) <= tol)[0]
    return int(hits[0]) + 1 if hits.size else None


def _rational_angle_witness(t: float, n_max: int) -> tuple[int, int] | None:
    """Smallest n with |arccos(t)/pi - k/(n+1)| <= tol for some 1<=k<=n.

    Scans denominators in ascending order, so exact low-order rationals
    (the ones the zero-eigenvalue set is made of in practice) are found
    first.  Points with an irrational angle ratio may still be flagged at
    some large denominator; they lie in the closure of the zero set, where
    uniform positivity fails anyway.
    """
    x = math.acos(t) / math.pi
    m = np.arange(2, n_max + 2, dtype=float)
    k = np.rint(x * m)
    ok = (np.abs(x - k / m) <= RATIONAL_ANGLE_TOL) & (k >= 1) & (k <= m - 1)
    hits = np.nonzero(ok)[0]
    if not hits.size:
        return None
    i = int(hits[0])
    return int(k[i]), int(m[i]) - 1


def is_positive_all_n(params: PentaParams,
                      n_max: int = DEFAULT_N_MAX) -> DefinitenessReport:
    """Strict positive definiteness at every order, on the r = p - s slice.

    Positive iff inside D1..D4 and not on the zero-eigenvalue set D0.  The
    D0 test applies only where it can fire: s > 0 with q**2 = 4 s (p - 2 s)
    (relative gate 1e-10) and t = -q/(4 s) inside (-1, 1); rationality of
    arccos(t)/pi is then probed against denominators up to n_max + 1.
    """
    _require_corner_slice(params)
    region = classify_region(params)
    corner_ok = params.r >= params.p - params.s  # equality holds here
    if region.tag == "OUTSIDE":
        return DefinitenessReport(False, False, region, corner_ok)
    p, q, s = params.p, params.q, params.s
    sc = params.scale
    on_manifold = (s > 0
                   and abs(q * q - 4 * s * (p - 2 * s))
                   <= DEGENERATE_REL * sc * sc)
    if on_manifold:
        t = -q / (4 * s)
        if -1.0 < t < 1.0:
            witness = _rational_angle_witness(t, n_max)
            if witness is not None:
                return DefinitenessReport(
                    True, False, RegionLabel("D0", witness), corner_ok)
    return DefinitenessReport(True, True, region, corner_ok)
