"""Verified numerics for symmetric pentadiagonal matrices with perturbed
corners: constant-time determinants, explicit eigenvalues, definiteness
classification, and the limiting MA(1) cumulant generating function.
"""

from .closedform import (CoefficientSet, CharacteristicRoots, Term,
                         characteristic_roots, classify_case,
                         coefficient_set, det_D_closed, det_D_eigenproduct,
                         det_E_closed)
from .definiteness import (DefinitenessReport, RegionLabel, classify_region,
                           eigenvalues_closed_form, g_poly, is_nonneg_all_n,
                           is_positive_all_n, null_eigenvalue_witness)
from .logscale import ConsistencyError, DetResult, LogScalar
from .ma1 import (CumulantValue, EmpiricalCumulant, LimitTerms, Ma1Point,
                  autocovariance, cumulant_L_n, d0_scatter, empirical_cumulant,
                  in_domain_D1, in_domain_D2, induced_params, limit_L,
                  limit_terms, near_closure_D0, simulate_ma1,
                  spectral_density)
from .matrices import build_dense_D, build_dense_E
from .oracles import (Inertia, cofactor_det_exact, oracle_det,
                      oracle_eigenvalues, oracle_inertia)
from .params import PentaParams
from .quadrature import LogCosParams, QuadratureError, log_integral_closed, quad_oracle
from .recurrence import (BACKEND, det_D_recurrence, det_E_recurrence,
                         initial_conditions, kernel_backends)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CharacteristicRoots",
    "CoefficientSet",
    "ConsistencyError",
    "CumulantValue",
    "DefinitenessReport",
    "DetResult",
    "EmpiricalCumulant",
    "Inertia",
    "LimitTerms",
    "LogCosParams",
    "LogScalar",
    "Ma1Point",
    "PentaParams",
    "QuadratureError",
    "RegionLabel",
    "Term",
    "autocovariance",
    "build_dense_D",
    "build_dense_E",
    "characteristic_roots",
    "classify_case",
    "classify_region",
    "coefficient_set",
    "cofactor_det_exact",
    "cumulant_L_n",
    "d0_scatter",
    "det_D_closed",
    "det_D_eigenproduct",
    "det_D_recurrence",
    "det_E_closed",
    "det_E_recurrence",
    "eigenvalues_closed_form",
    "empirical_cumulant",
    "g_poly",
    "in_domain_D1",
    "in_domain_D2",
    "induced_params",
    "initial_conditions",
    "is_nonneg_all_n",
    "is_positive_all_n",
    "kernel_backends",
    "limit_L",
    "limit_terms",
    "log_integral_closed",
    "near_closure_D0",
    "null_eigenvalue_witness",
    "oracle_det",
    "oracle_eigenvalues",
    "oracle_inertia",
    "quad_oracle",
    "simulate_ma1",
    "spectral_density",
]
