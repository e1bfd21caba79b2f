"""Shared fixtures: stratified parameter samplers for the eleven
coefficient cases, plus golden parameter sets used across modules."""

from __future__ import annotations

import math

import numpy as np
import pytest

from pentacorner import PentaParams, classify_case

# Worked example from the source material: r < p - s, all closed-form
# machinery exercised, det(D_5) = -40.
EXAMPLE_51 = PentaParams(p=5.0, q=-1.0, r=1.0, s=2.0)
# MA(1) induced parameters at phi = 1/3, lambda = (-1, -1).
EXAMPLE_52 = PentaParams(p=35 / 9, q=16 / 9, r=32 / 9, s=1 / 3)
# MA(1) induced parameters at phi = 1/3, lambda = (0, 1).
EXAMPLE_53 = PentaParams(p=1 / 3, q=-10 / 9, r=2 / 3, s=-1 / 3)
IDENTITY = PentaParams(p=1.0, q=0.0, r=1.0, s=0.0)


def _uniform(rng, lo, hi):
    return float(rng.uniform(lo, hi))


def _signed(rng, lo, hi):
    return float(rng.uniform(lo, hi) * rng.choice([-1.0, 1.0]))


def _sample_gen_distinct(rng) -> PentaParams:
    while True:
        p, q, r, s = (float(v) for v in rng.uniform(-3, 3, size=4))
        if abs(q) < 0.05 or abs(s) < 0.05:
            continue
        if abs(q * q - 4 * s * (p - 2 * s)) < 1e-3:
            continue
        if abs(q * q - (p + 2 * s) ** 2 / 4) < 1e-3:
            continue
        return PentaParams(p=p, q=q, r=r, s=s)


def _sample_q2_gt(rng) -> PentaParams:
    if rng.random() < 0.8:
        s = _uniform(rng, 0.2, 1.2)
        p = 6 * s + _uniform(rng, 0.5, 2.5)
    else:  # s < 0 needs p <= 2s to keep q real
        s = -_uniform(rng, 0.4, 1.2)
        p = _uniform(rng, 6 * s + 0.3, 2 * s - 0.1)
    q = float(rng.choice([-1.0, 1.0])) * math.sqrt(4 * s * (p - 2 * s))
    return PentaParams(p=p, q=q, r=_uniform(rng, -2, 2.5), s=s)


def _sample_q2_lt(rng) -> PentaParams:
    if rng.random() < 0.8:
        s = _uniform(rng, 0.2, 1.2)
        p = 2 * s + 4 * s * _uniform(rng, 0.1, 0.9)
    else:
        s = -_uniform(rng, 0.4, 1.2)
        p = 6 * s - _uniform(rng, 0.3, 2.0)
    q = float(rng.choice([-1.0, 1.0])) * math.sqrt(4 * s * (p - 2 * s))
    return PentaParams(p=p, q=q, r=_uniform(rng, -2, 2.5), s=s)


def _sample_quarter(rng) -> PentaParams:
    while True:
        s = _signed(rng, 0.3, 1.2)
        p = _uniform(rng, -3, 3)
        if abs(p - 6 * s) < 0.4 or abs(p + 2 * s) < 0.4:
            continue
        q = float(rng.choice([-1.0, 1.0])) * abs(p + 2 * s) / 2
        return PentaParams(p=p, q=q, r=_uniform(rng, -2, 2.5), s=s)


def _sample_all_equal(rng) -> PentaParams:
    s = _signed(rng, 0.2, 1.2)
    return PentaParams(p=6 * s, q=float(rng.choice([-1.0, 1.0])) * 4 * s,
                       r=_uniform(rng, -2, 2.5), s=s)


def _sample_qzero_gen(rng) -> PentaParams:
    while True:
        s = _signed(rng, 0.2, 1.5)
        p = _uniform(rng, -3, 3)
        if abs(p - 2 * s) < 0.3 or abs(p + 2 * s) < 0.3:
            continue
        return PentaParams(p=p, q=0.0, r=_uniform(rng, -2, 2.5), s=s)


def _sample_qzero_p2s(rng) -> PentaParams:
    s = _signed(rng, 0.2, 1.5)
    return PentaParams(p=2 * s, q=0.0, r=_uniform(rng, -2, 2.5), s=s)


def _sample_qzero_pneg2s(rng) -> PentaParams:
    s = _signed(rng, 0.2, 1.5)
    return PentaParams(p=-2 * s, q=0.0, r=_uniform(rng, -2, 2.5), s=s)


def _sample_szero_gen(rng) -> PentaParams:
    while True:
        q = _signed(rng, 0.2, 1.5)
        p = _uniform(rng, -3, 3)
        if abs(p * p - 4 * q * q) < 0.3:
            continue
        return PentaParams(p=p, q=q, r=_uniform(rng, -2, 2.5), s=0.0)


def _sample_szero_p24q2(rng) -> PentaParams:
    p = _signed(rng, 0.4, 3.0)
    return PentaParams(p=p, q=float(rng.choice([-1.0, 1.0])) * p / 2,
                       r=_uniform(rng, -2, 2.5), s=0.0)


def _sample_diag(rng) -> PentaParams:
    return PentaParams(p=_signed(rng, 0.2, 3.0), q=0.0,
                       r=_uniform(rng, -2, 2.5), s=0.0)


CASE_SAMPLERS = {
    "GEN_DISTINCT": _sample_gen_distinct,
    "Q2_4S_P_GT_6S": _sample_q2_gt,
    "Q2_4S_P_LT_6S": _sample_q2_lt,
    "Q2_QUARTER_P_NE_6S": _sample_quarter,
    "ALL_EQUAL_P_6S": _sample_all_equal,
    "QZERO_GEN": _sample_qzero_gen,
    "QZERO_P_2S": _sample_qzero_p2s,
    "QZERO_P_NEG2S": _sample_qzero_pneg2s,
    "SZERO_GEN": _sample_szero_gen,
    "SZERO_P2_4Q2": _sample_szero_p24q2,
    "DIAG": _sample_diag,
}


def sample_case(case_id: str, rng) -> PentaParams:
    params = CASE_SAMPLERS[case_id](rng)
    assert classify_case(params) == case_id, (case_id, params)
    return params


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
