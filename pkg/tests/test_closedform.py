import math

import numpy as np
import pytest

from pentacorner import (PentaParams, build_dense_D, characteristic_roots,
                         classify_case, coefficient_set, det_D_closed,
                         det_D_eigenproduct, det_D_recurrence, det_E_closed,
                         det_E_recurrence, initial_conditions, oracle_det)
from pentacorner.closedform import CASE_IDS, char_poly_residual

from conftest import EXAMPLE_51, EXAMPLE_52, IDENTITY, sample_case

# Printed six-significant-digit values for the worked example.
GOLDEN_MU = [complex(-1.94374, -0.471031), complex(-1.94374, 0.471031),
             1.03951, 3.84797, 2.0]
GOLDEN_KAPPA = [complex(0.163717, 0.05368), complex(0.163717, -0.05368),
                -0.395173, -0.075118, 1.14286]
PRINT_TOL = 6e-6


def test_example_roots_to_printed_digits():
    rt = characteristic_roots(EXAMPLE_51)
    assert rt.kind == "GENERAL_Q_S"
    for got, want in zip(rt.roots, GOLDEN_MU):
        assert got.real == pytest.approx(complex(want).real, abs=PRINT_TOL)
        assert got.imag == pytest.approx(complex(want).imag, abs=PRINT_TOL)
    assert rt.roots[4] == 2.0  # the fifth root is exactly s


def test_example_coefficients_to_printed_digits():
    cs = coefficient_set(EXAMPLE_51)
    assert cs.case_id == "GEN_DISTINCT"
    assert len(cs.terms) == 5
    for term, want in zip(cs.terms, GOLDEN_KAPPA):
        (kappa,) = term.coeffs
        assert kappa.real == pytest.approx(complex(want).real, abs=PRINT_TOL)
        assert kappa.imag == pytest.approx(complex(want).imag, abs=PRINT_TOL)


def test_gen_coefficients_solve_the_vandermonde_system(rng):
    # independent derivation: the kappas are the unique solution of the
    # 5x5 Vandermonde system fitting e_1..e_5
    for _ in range(20):
        params = sample_case("GEN_DISTINCT", rng)
        cs = coefficient_set(params)
        mus = np.array([t.root for t in cs.terms])
        es = np.array(initial_conditions(params), dtype=complex)
        vander = np.vander(mus, 5, increasing=True).T
        scaled = np.linalg.solve(vander, es)
        expect = scaled / mus
        got = np.array([t.coeffs[0] for t in cs.terms])
        # the solve's error floor scales with the biggest coefficient
        floor = 1e-7 * max(1.0, float(np.max(np.abs(expect))))
        assert np.allclose(got, expect, rtol=1e-7, atol=floor)


def test_roots_satisfy_their_polynomial(rng):
    for case in CASE_IDS:
        if case == "DIAG":
            continue
        params = sample_case(case, rng)
        rt = characteristic_roots(params)
        coeff_scale = max(1.0, params.scale ** 5)
        for z in rt.roots:
            assert abs(char_poly_residual(params, z)) <= 1e-9 * coeff_scale


def test_qzero_and_szero_root_structure():
    rt = characteristic_roots(PentaParams(p=3, q=0, r=1, s=1))
    assert rt.kind == "Q_ZERO"
    assert rt.roots[0] == -1 and rt.roots[1] == 1
    golden = ((3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2)
    assert rt.roots[2].real == pytest.approx(golden[0], rel=1e-14)
    assert rt.roots[3].real == pytest.approx(golden[1], rel=1e-14)

    rt = characteristic_roots(PentaParams(p=2, q=1, r=1, s=0))
    assert rt.kind == "S_ZERO"
    assert rt.roots[0] == rt.roots[1] == 1.0  # p^2 = 4q^2: repeated p/2


def test_case_dispatch_is_exhaustive(rng):
    for case in CASE_IDS:
        params = sample_case(case, rng)
        assert classify_case(params) == case


def test_case_dispatch_known_points():
    assert classify_case(EXAMPLE_51) == "GEN_DISTINCT"
    assert classify_case(PentaParams(p=6, q=4, r=1.5, s=1)) == "ALL_EQUAL_P_6S"
    assert classify_case(PentaParams(p=2, q=1, r=1, s=0)) == "SZERO_P2_4Q2"
    assert classify_case(PentaParams(p=2, q=0, r=1, s=1)) == "QZERO_P_2S"
    assert classify_case(IDENTITY) == "DIAG"


def test_all_equal_case_coefficient_structure():
    params = PentaParams(p=6, q=4, r=1.5, s=1)
    cs = coefficient_set(params)
    (term,) = cs.terms
    assert term.root == 1.0
    # constant coefficient 1, then (r+8s)/(6s), (5r-7s)/(12s), ...
    assert term.coeffs[0] == 1.0
    assert term.coeffs[1].real == pytest.approx((1.5 + 8) / 6)
    assert term.coeffs[4].real == pytest.approx((1.5 - 5) / 12)


def test_szero_degenerate_coefficients_can_vanish():
    params = PentaParams(p=2, q=1, r=1, s=0)  # 2r - p = 0
    cs = coefficient_set(params)
    (term,) = cs.terms
    assert term.coeffs[0] == 1.0 and term.coeffs[1] == 0.0
    # e_n = (p/2)^n exactly here
    assert det_E_closed(params, 9).value.to_float() == pytest.approx(1.0)


def test_det_E_base_cases_all_branches(rng):
    for case in CASE_IDS:
        params = sample_case(case, rng)
        es = initial_conditions(params)
        for n in range(1, 6):
            got = det_E_closed(params, n).value
            if abs(es[n - 1]) < 1e-12 * params.scale ** n:
                assert got.sign == 0 or got.log_abs < math.log(1e-9)
            else:
                assert got.to_float() == pytest.approx(es[n - 1], rel=1e-9)


def test_det_E_deep_order_matches_recurrence(rng):
    for case in CASE_IDS:
        params = sample_case(case, rng)
        for n in (17, 30):
            got = det_E_closed(params, n).value
            expect = det_E_recurrence(params, n).value
            if expect.sign == 0:
                assert got.sign == 0 or got.log_abs < math.log(1e-8)
            else:
                assert got.agrees(expect, rel=1e-8), (case, n, got, expect)


def test_det_D_example_and_identity():
    got = det_D_closed(EXAMPLE_51, 5).value
    assert got.sign == -1
    assert got.to_float() == pytest.approx(-40.0, rel=1e-10)
    for n in (3, 17, 1000):
        v = det_D_closed(IDENTITY, n).value
        assert v.sign == 1 and abs(v.log_abs) < 1e-12


def test_det_D_diagonal_formula():
    params = PentaParams(p=3, q=0, r=2, s=0)
    assert det_D_closed(params, 7).value.to_float() == pytest.approx(972.0)
    zero_p = PentaParams(p=0, q=0, r=2, s=0)
    assert det_D_closed(zero_p, 5).value.sign == 0


def test_det_D_huge_orders_match_printed_table():
    expect = {5 * 10 ** 6: (1.65193, 2926158),
              5 * 10 ** 7: (8.47348, 29261604),
              5 * 10 ** 8: (1.06844, 292616072)}
    for n, (mant, exp10) in expect.items():
        got = det_D_closed(EXAMPLE_51, n).value
        assert got.sign == 1
        g_mant, g_exp = got.mantissa_exp10()
        assert g_exp == exp10
        assert g_mant == pytest.approx(mant, rel=1e-4)


def test_three_way_agreement_stratified(rng):
    for case in CASE_IDS:
        for _ in range(12):
            params = sample_case(case, rng)
            n = int(rng.integers(3, 41))
            closed = det_D_closed(params, n)
            assert closed.case_id == case
            rec = det_D_recurrence(params, n).value
            dense = oracle_det(build_dense_D(params, n))
            for got in (closed.value, rec):
                if dense.sign == 0:
                    assert got.sign == 0 or got.log_abs < math.log(1e-7)
                else:
                    assert got.agrees(dense, rel=1e-8), (case, params, n)


def test_small_orders_match_dense_in_every_case(rng):
    # the closed form stays valid at n = 3, 4, 5 (extended-validity check)
    for case in CASE_IDS:
        for _ in range(4):
            params = sample_case(case, rng)
            for n in (3, 4, 5):
                got = det_D_closed(params, n).value
                dense = oracle_det(build_dense_D(params, n))
                if dense.sign == 0:
                    assert got.sign == 0 or got.log_abs < math.log(1e-7)
                else:
                    assert got.agrees(dense, rel=1e-8), (case, params, n)


def test_near_degenerate_points_stay_on_generic_branch(rng):
    # just outside the gate the generic coefficients blow up like
    # 1/distance, but the assembled determinant must still match
    s, p, r = 1.0, 9.0, 1.7
    for eps in (1e-8, 1e-7, 1e-6):
        q = math.sqrt(4 * s * (p - 2 * s) * (1 + eps))
        params = PentaParams(p=p, q=q, r=r, s=s)
        assert classify_case(params) == "GEN_DISTINCT"
        got = det_D_closed(params, 25).value
        expect = det_D_recurrence(params, 25).value
        assert got.agrees(expect, rel=1e-6)


def test_just_inside_the_gate_uses_degenerate_branch():
    s, p, r = 1.0, 9.0, 1.7
    q = math.sqrt(4 * s * (p - 2 * s) * (1 + 1e-12))
    params = PentaParams(p=p, q=q, r=r, s=s)
    assert classify_case(params) == "Q2_4S_P_GT_6S"
    got = det_E_closed(params, 20).value
    expect = det_E_recurrence(params, 20).value
    assert got.agrees(expect, rel=1e-6)


def test_closed_E_satisfies_the_five_term_recurrence(rng):
    for case in ("GEN_DISTINCT", "Q2_QUARTER_P_NE_6S", "ALL_EQUAL_P_6S"):
        params = sample_case(case, rng)
        p, q, r, s = params.p, params.q, params.r, params.s
        es = [det_E_closed(params, n).value.to_float() for n in range(1, 41)]
        for n in range(6, 41):
            lhs = es[n - 1]
            rhs = ((p - s) * es[n - 2] + (p * s - q * q) * (es[n - 3]
                   - s * es[n - 4]) + s ** 3 * (s - p) * es[n - 5]
                   + s ** 5 * es[n - 6])
            assert lhs == pytest.approx(rhs, rel=1e-8, abs=1e-9)


def test_eigenproduct_matches_closed_on_corner_slice(rng):
    got = det_D_eigenproduct(EXAMPLE_52, 6).value
    expect = det_D_closed(EXAMPLE_52, 6).value
    assert got.agrees(expect, rel=1e-9)
    for _ in range(25):
        p, q, s = (float(v) for v in rng.uniform(-2.5, 2.5, size=3))
        params = PentaParams(p=p, q=q, r=p - s, s=s)
        n = int(rng.integers(3, 25))
        got = det_D_eigenproduct(params, n).value
        expect = det_D_closed(params, n).value
        if expect.sign == 0 or got.sign == 0:
            pair = sorted([got.log_abs, expect.log_abs])
            assert pair[1] < math.log(1e-6) or got.sign == expect.sign
        else:
            assert got.agrees(expect, rel=1e-8), (params, n)


def test_eigenproduct_scalar_matrix():
    params = PentaParams(p=2.5, q=0, r=2.5, s=0)
    got = det_D_eigenproduct(params, 9).value
    assert got.to_float() == pytest.approx(2.5 ** 9, rel=1e-12)


def test_eigenproduct_detects_null_eigenvalue():
    params = PentaParams(p=4.0, q=-2 * math.sqrt(2), r=3.0, s=1.0)
    assert det_D_eigenproduct(params, 3).value.sign == 0


def test_eigenproduct_requires_corner_slice():
    with pytest.raises(ValueError):
        det_D_eigenproduct(EXAMPLE_51, 5)


def test_order_bounds():
    with pytest.raises(ValueError):
        det_E_closed(EXAMPLE_51, 0)
    with pytest.raises(ValueError):
        det_D_closed(EXAMPLE_51, 2)
