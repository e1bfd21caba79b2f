"""Constant-time determinants via characteristic roots of the minor
recurrence.

det(E_n) solves a linear recurrence whose auxiliary quintic factors
explicitly, so det(E_n) = sum_j P_j(n) * root_j**n with polynomial-in-n
coefficients P_j (constants away from the degenerate parameter manifolds,
degree up to 4 on them).  det(D_n) is a fixed five-term combination of
previous det(E) values, which maps term-by-term onto the same roots: each
E-term (root, P) contributes a D-term (root, Q) with

    Q(n) = sum_j c_j * root**(-j) * P(n - j),

c_j being the combination weights.  For constant P this collapses to the
single-evaluation form Q = P * f(root) * root**(-5) with f the weight
polynomial; for n-dependent P the shifted form is the correct one (naively
reusing P(n) is wrong on the degenerate manifolds, which is observable
already at n = 5).

Eleven coefficient cases cover the parameter space; dispatch uses a
relative gate tolerance of 1e-9 on the degeneracy equalities.  All
coefficient arithmetic is complex throughout: the auxiliary square roots
are square roots of possibly negative reals, and complex roots enter as
conjugate pairs that cancel to a real determinant when summed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .logscale import DetResult, LogScalar, log_polar_term, signed_log_sum
from .params import PentaParams

__all__ = [
    "CASE_IDS",
    "CharacteristicRoots",
    "Term",
    "CoefficientSet",
    "characteristic_roots",
    "classify_case",
    "coefficient_set",
    "det_E_closed",
    "det_D_closed",
    "det_D_eigenproduct",
    "char_poly_residual",
]

CASE_IDS = (
    "GEN_DISTINCT",
    "Q2_4S_P_GT_6S",
    "Q2_4S_P_LT_6S",
    "Q2_QUARTER_P_NE_6S",
    "ALL_EQUAL_P_6S",
    "QZERO_GEN",
    "QZERO_P_2S",
    "QZERO_P_NEG2S",
    "SZERO_GEN",
    "SZERO_P2_4Q2",
    "DIAG",
)

# Relative tolerance deciding whether a parameter point sits on one of the
# degenerate manifolds (repeated characteristic roots).
CASE_GATE_REL = 1e-9
# |q| or |s| below this (relative) counts as exactly zero for branch kind.
COEFF_ZERO_REL = 1e-14
# Eigenvalues below this relative magnitude make the eigenproduct singular.
EIGENPRODUCT_ZERO_REL = 1e-12


def _csqrt(x: complex) -> complex:
    return cmath.sqrt(complex(x))


@dataclass(frozen=True)
class CharacteristicRoots:
    """Roots of the minor recurrence's auxiliary polynomial.

    kind is one of GENERAL_Q_S (quintic, five roots), Q_ZERO (quartic),
    S_ZERO (quadratic) or DIAGONAL.  The aux fields hold the intermediate
    square roots the root formulas are built from, populated as applicable.
    """

    kind: str
    roots: tuple[complex, ...]
    alpha: complex | None = None
    beta1: complex | None = None
    beta2: complex | None = None
    gamma: complex | None = None
    delta: complex | None = None


@dataclass(frozen=True)
class Term:
    """One summand P(n) * root**n; coeffs are P's coefficients, ascending."""

    root: complex
    coeffs: tuple[complex, ...]


@dataclass(frozen=True)
class CoefficientSet:
    """Case label plus the term list reproducing det(E_n)."""

    case_id: str
    terms: tuple[Term, ...]


def _kind(params: PentaParams) -> str:
    tol = COEFF_ZERO_REL * params.scale
    q_zero = abs(params.q) <= tol
    s_zero = abs(params.s) <= tol
    if q_zero and s_zero:
        return "DIAGONAL"
    if s_zero:
        return "S_ZERO"
    if q_zero:
        return "Q_ZERO"
    return "GENERAL_Q_S"


def characteristic_roots(params: PentaParams) -> CharacteristicRoots:
    """Roots (and auxiliary radicals) for the applicable recurrence kind."""
    p, q, s = params.p, params.q, params.s
    kind = _kind(params)
    if kind == "DIAGONAL":
        return CharacteristicRoots("DIAGONAL", (complex(p),))
    if kind == "S_ZERO":
        w = _csqrt(p * p - 4 * q * q)
        return CharacteristicRoots("S_ZERO", ((p - w) / 2, (p + w) / 2))
    if kind == "Q_ZERO":
        w = _csqrt(p * p - 4 * s * s)
        roots = (complex(-s), complex(s), (p - w) / 2, (p + w) / 2)
        return CharacteristicRoots("Q_ZERO", roots)
    alpha = _csqrt((p + 2 * s) ** 2 - 4 * q * q)
    beta1 = _csqrt(2 * (p - 2 * s) * (p + 2 * s - alpha) - 4 * q * q)
    beta2 = _csqrt(2 * (p - 2 * s) * (p + 2 * s + alpha) - 4 * q * q)
    base = p - 2 * s
    roots = ((base - alpha - beta1) / 4, (base - alpha + beta1) / 4,
             (base + alpha - beta2) / 4, (base + alpha + beta2) / 4,
             complex(s))
    gamma = _csqrt((p - 6 * s) * (p - 2 * s))
    delta = _csqrt((p - 6 * s) * (p + 2 * s))
    return CharacteristicRoots("GENERAL_Q_S", roots, alpha=alpha,
                               beta1=beta1, beta2=beta2, gamma=gamma,
                               delta=delta)


def classify_case(params: PentaParams) -> str:
    """Which of the eleven coefficient cases applies to this point."""
    p, q, s = params.p, params.q, params.s
    kind = _kind(params)
    sc = params.scale
    if kind == "DIAGONAL":
        return "DIAG"
    if kind == "S_ZERO":
        if abs(p * p - 4 * q * q) <= CASE_GATE_REL * sc * sc:
            return "SZERO_P2_4Q2"
        return "SZERO_GEN"
    if kind == "Q_ZERO":
        if abs(p - 2 * s) <= CASE_GATE_REL * sc:
            return "QZERO_P_2S"
        if abs(p + 2 * s) <= CASE_GATE_REL * sc:
            return "QZERO_P_NEG2S"
        return "QZERO_GEN"
    q2 = q * q
    on_first = abs(q2 - 4 * s * (p - 2 * s)) <= CASE_GATE_REL * sc * sc
    on_second = abs(q2 - (p + 2 * s) ** 2 / 4) <= CASE_GATE_REL * sc * sc
    p_six = abs(p - 6 * s) <= CASE_GATE_REL * sc
    if (on_first or on_second) and p_six:
        return "ALL_EQUAL_P_6S"
    if on_first:
        return "Q2_4S_P_GT_6S" if p > 6 * s else "Q2_4S_P_LT_6S"
    if on_second:
        return "Q2_QUARTER_P_NE_6S"
    return "GEN_DISTINCT"


def _kernel_K(p, q, r, s, x, y, z):
    """Coefficient kernel for the five-distinct-roots case."""
    q2 = q * q
    num = (2 * s ** 4 * (2 * s + 3 * p + x + z)
           + p * s * s * (4 * q2 - 2 * s * (p - x) - (p + x) * (2 * p + z))
           - 2 * s * q2 * (4 * q2 - 2 * p * p - (p - 2 * s) * (2 * x + z)
                           - x * z)
           + r * (4 * q2 * q2 - q2 * (p + x) * (2 * p + z)
                  + 2 * s * q2 * (p - 2 * s + 3 * x + 2 * z)
                  - 2 * s * s * p * (p + x + z)
                  - 2 * s ** 3 * (p - 2 * s - x + z))
           + (q2 - p * r) * (2 * s * s * (2 * s + 3 * p + x)
                             + 2 * q2 * (3 * p - 4 * s + x + z)
                             - (s * (p - x) + p * (p + x)) * (2 * p + z)))
    den = z * (p - 2 * s + x + z) * (p - 6 * s + x + z) * ((2 * x + z) ** 2
                                                           - y * y)
    return 64 * num / den


def _conjugate_canonicalize(terms: list[Term]) -> tuple[Term, ...]:
    """Rewrite near-conjugate term pairs as exact conjugates.

    The coefficient formulas produce conjugate pairs already; this removes
    the last few ulps of asymmetry so the imaginary parts cancel exactly
    in the evaluation sum.
    """
    out = list(terms)
    used = set()
    for i, ti in enumerate(out):
        if i in used or ti.root.imag == 0.0:
            continue
        for j in range(i + 1, len(out)):
            tj = out[j]
            if j in used or tj.root.imag == 0.0:
                continue
            if len(ti.coeffs) != len(tj.coeffs):
                continue
            rtol = 1e-6 * (1.0 + abs(ti.root))
            if abs(ti.root.conjugate() - tj.root) > rtol:
                continue
            ok = all(abs(a.conjugate() - b) <= 1e-6 * (1.0 + abs(a))
                     for a, b in zip(ti.coeffs, tj.coeffs))
            if ok:
                out[j] = Term(ti.root.conjugate(),
                              tuple(a.conjugate() for a in ti.coeffs))
                used.update((i, j))
                break
    return tuple(out)


def coefficient_set(params: PentaParams,
                    roots: CharacteristicRoots | None = None) -> CoefficientSet:
    """Terms of det(E_n) = sum P_j(n) root_j**n for the applicable case."""
    p, q, r, s = params.p, params.q, params.r, params.s
    rt = roots if roots is not None else characteristic_roots(params)
    case = classify_case(params)

    if case == "DIAG":
        # det(E_n) = r p**(n-1); kept out of the term machinery because the
        # root may be zero.
        return CoefficientSet(case, ())

    if case == "SZERO_GEN":
        w = _csqrt(p * p - 4 * q * q)
        terms = [Term(rt.roots[0], ((p - 2 * r + w) / (2 * w),)),
                 Term(rt.roots[1], ((2 * r - p + w) / (2 * w),))]
        return CoefficientSet(case, _conjugate_canonicalize(terms))

    if case == "SZERO_P2_4Q2":
        terms = [Term(complex(p / 2), (1.0 + 0j, complex((2 * r - p) / p)))]
        return CoefficientSet(case, tuple(terms))

    if case == "QZERO_GEN":
        w = _csqrt(p * p - 4 * s * s)

        def K6(j):
            return complex((p - r + j * s) / (2 * (p + 2 * j * s)))

        def K7(j):
            num = (p ** 3 * r - p * p * s * s - 3 * p * r * s * s
                   + 2 * s ** 4 + j * (p * s * s + r * s * s - p * p * r) * w)
            den = (p * p - 4 * s * s) * (p * p - 2 * s * s - j * p * w)
            return num / den

        terms = [Term(complex(-s), (K6(1),)), Term(complex(s), (K6(-1),)),
                 Term((p - w) / 2, (K7(1),)), Term((p + w) / 2, (K7(-1),))]
        return CoefficientSet(case, _conjugate_canonicalize(terms))

    if case == "QZERO_P_2S":
        # Triple root +s absorbs the n and n**2 coefficients.
        terms = [Term(complex(-s), (complex((3 * s - r) / (8 * s)),)),
                 Term(complex(s), (complex((r + 5 * s) / (8 * s)),
                                   complex(r / (2 * s)),
                                   complex((r - s) / (4 * s))))]
        return CoefficientSet(case, tuple(terms))

    if case == "QZERO_P_NEG2S":
        terms = [Term(complex(-s), (complex((5 * s - r) / (8 * s)),
                                    complex(-r / (2 * s)),
                                    complex(-(r + s) / (4 * s)))),
                 Term(complex(s), (complex((r + 3 * s) / (8 * s)),))]
        return CoefficientSet(case, tuple(terms))

    if case == "ALL_EQUAL_P_6S":
        terms = [Term(complex(s), (1.0 + 0j,
                                   complex((r + 8 * s) / (6 * s)),
                                   complex((5 * r - 7 * s) / (12 * s)),
                                   complex((r - 4 * s) / (3 * s)),
                                   complex((r - 5 * s) / (12 * s))))]
        return CoefficientSet(case, tuple(terms))

    if case in ("Q2_4S_P_GT_6S", "Q2_4S_P_LT_6S"):
        gamma = rt.gamma

        def K3(z):
            num = (2 * s * s * (p - 2 * s) ** 2 * (p - 4 * s + z)
                   * ((r - p) * (p - 4 * s + z) + 2 * s * s))
            den = z * (4 * s * (3 * s - z) + p * (p - 8 * s + z)) ** 3
            return num / den

        K1 = complex((p * p - p * (r + 8 * s) + 2 * s * (2 * r + 11 * s))
                     / (p - 6 * s) ** 2)
        K2 = lambda j: complex((p - r - j * s) / (p - 6 * s))
        single_lo = (p - 4 * s - gamma) / 2
        single_hi = (p - 4 * s + gamma) / 2
        terms = [Term(complex(s), (K1, 2 * K2(2), K2(1))),
                 Term(single_lo, (K3(gamma),)),
                 Term(single_hi, (K3(-gamma),))]
        return CoefficientSet(case, _conjugate_canonicalize(terms))

    if case == "Q2_QUARTER_P_NE_6S":
        delta = rt.delta

        def K4(z):
            num = (p ** 5 * (12 * s - p + z)
                   - 2 * p ** 4 * s * (24 * s - 4 * r + 5 * z)
                   - 4 * p ** 3 * s * (2 * r * (10 * s + z)
                                       - s * (16 * s + 9 * z))
                   + 8 * p * p * s * s * (4 * r * (5 * s + 2 * z)
                                          + s * (20 * s - 7 * z))
                   + 16 * p * s ** 3 * (2 * r * (8 * s - 3 * z)
                                        - 5 * s * (8 * s + z))
                   - 32 * s ** 4 * (2 * r * (6 * s + z) + s * (6 * s - 7 * z)))
            den = z * (p - 6 * s) * (p - 2 * s - z) ** 2 * (p - 6 * s - z) ** 2
            return 8 * num / den

        def K5(z):
            num = (p ** 4 * (2 * r + 4 * s - p + z)
                   - 2 * p ** 3 * (r * (6 * s + z) - s * (6 * s - z))
                   - 8 * p * p * s * (r * (s - z) + s * (s + z))
                   + 8 * p * s * s * (r * (8 * s + z) - s * (6 * s + z))
                   - 16 * s ** 3 * (4 * s * s - r * (2 * s - z)))
            den = z * z * (p - 6 * s - z) * (p - 2 * s - z) ** 2
            return 4 * num / den

        lo = (p - 2 * s - delta) / 4
        hi = (p - 2 * s + delta) / 4
        tail = complex(8 * s * (r + s - p) / (p - 6 * s) ** 2)
        terms = [Term(lo, (K4(delta), K5(delta))),
                 Term(hi, (K4(-delta), K5(-delta))),
                 Term(complex(s), (tail,))]
        return CoefficientSet(case, _conjugate_canonicalize(terms))

    # GEN_DISTINCT
    alpha, beta1, beta2 = rt.alpha, rt.beta1, rt.beta2
    kap = (_kernel_K(p, q, r, s, -alpha, beta2, -beta1),
           _kernel_K(p, q, r, s, -alpha, beta2, beta1),
           _kernel_K(p, q, r, s, alpha, beta1, -beta2),
           _kernel_K(p, q, r, s, alpha, beta1, beta2),
           complex(2 * s * (r + s - p) / (q * q - 4 * s * (p - 2 * s))))
    terms = [Term(root, (k,)) for root, k in zip(rt.roots, kap)]
    return CoefficientSet("GEN_DISTINCT", _conjugate_canonicalize(terms))


def _poly_shift(coeffs: tuple[complex, ...], delta: float) -> list[complex]:
    """Coefficients of P(n + delta) given those of P(n)."""
    out = [0j] * len(coeffs)
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        for i in range(k + 1):
            out[i] += a * math.comb(k, i) * delta ** (k - i)
    return out


def _d_weights(params: PentaParams) -> dict[int, float]:
    """Weights c_j of det(D_n) = sum_j c_j det(E_{n-j})."""
    p, q, r, s = params.p, params.q, params.r, params.s
    if _kind(params) in ("Q_ZERO", "DIAGONAL"):
        return {1: r, 3: -p * s * s, 4: s ** 4}
    return {1: r - s, 2: p * s - q * q, 3: -s * (p * s - q * q),
            4: s ** 3 * (s - p), 5: s ** 5}


def _terms_for_D(params: PentaParams, cs: CoefficientSet) -> tuple[Term, ...]:
    weights = _d_weights(params)
    out = []
    for term in cs.terms:
        acc = [0j] * len(term.coeffs)
        for j, c in weights.items():
            if c == 0.0:
                continue
            w = c * term.root ** (-j)
            for i, a in enumerate(_poly_shift(term.coeffs, -j)):
                acc[i] += w * a
        out.append(Term(term.root, tuple(acc)))
    return tuple(out)


def _polyval(coeffs: tuple[complex, ...], n: int) -> complex:
    acc = 0j
    for a in reversed(coeffs):
        acc = acc * n + a
    return acc


def _eval_terms(terms: tuple[Term, ...], n: int) -> LogScalar:
    entries = [log_polar_term(_polyval(t.coeffs, n), t.root, n)
               for t in terms]
    return signed_log_sum(entries)


def _power_value(base: float, coeff: float, exponent: int) -> LogScalar:
    """coeff * base**exponent in sign/log form, honoring base = 0."""
    if coeff == 0.0 or (base == 0.0 and exponent > 0):
        return LogScalar.zero()
    sign = 1 if coeff > 0 else -1
    log_abs = math.log(abs(coeff))
    if exponent != 0:
        if base < 0 and exponent % 2:
            sign = -sign
        log_abs += exponent * math.log(abs(base))
    return LogScalar(sign, log_abs)


def det_E_closed(params: PentaParams, n: int) -> DetResult:
    """det(E_n) in O(1) arithmetic regardless of n."""
    if n < 1:
        raise ValueError(f"E requires n >= 1, got {n}")
    cs = coefficient_set(params)
    if cs.case_id == "DIAG":
        return DetResult(_power_value(params.p, params.r, n - 1),
                         "CLOSED_FORM", cs.case_id)
    return DetResult(_eval_terms(cs.terms, n), "CLOSED_FORM", cs.case_id)


def det_D_closed(params: PentaParams, n: int) -> DetResult:
    """det(D_n) in O(1) arithmetic regardless of n."""
    if n < 3:
        raise ValueError(f"D requires n >= 3, got {n}")
    cs = coefficient_set(params)
    if cs.case_id == "DIAG":
        return DetResult(
            _power_value(params.p, params.r * params.r, n - 2),
            "CLOSED_FORM", cs.case_id)
    return DetResult(_eval_terms(_terms_for_D(params, cs), n),
                     "CLOSED_FORM", cs.case_id)


def det_D_eigenproduct(params: PentaParams, n: int) -> DetResult:
    """det(D_n) as the product of the explicit eigenvalues (r = p - s only)."""
    from .definiteness import eigenvalues_closed_form

    alphas = eigenvalues_closed_form(params, n)
    tol = EIGENPRODUCT_ZERO_REL * params.scale
    if np.any(np.abs(alphas) <= tol):
        return DetResult(LogScalar.zero(), "EIGEN_PRODUCT")
    sign = -1 if int(np.sum(alphas < 0)) % 2 else 1
    log_abs = float(np.sum(np.log(np.abs(alphas))))
    return DetResult(LogScalar(sign, log_abs), "EIGEN_PRODUCT")


def char_poly_residual(params: PentaParams, z: complex) -> complex:
    """Value of the auxiliary polynomial at z, for root certification."""
    p, q, s = params.p, params.q, params.s
    kind = _kind(params)
    if kind == "GENERAL_Q_S":
        return (z ** 5 - (p - s) * z ** 4
                - (p * s - q * q) * (z ** 3 - s * z * z)
                - s ** 3 * (s - p) * z - s ** 5)
    if kind == "Q_ZERO":
        return z ** 4 - p * z ** 3 + p * s * s * z - s ** 4
    if kind == "S_ZERO":
        return z * z - p * z + q * q
    return z - p
