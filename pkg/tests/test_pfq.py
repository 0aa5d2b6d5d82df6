"""Generalized hypergeometric evaluation: closed forms, divergence guards,
agreement with mpmath's independent implementation."""

import pytest
from mpmath import hyper, mp, mpf, workprec

from wzmahler import DivergentSeriesError, DomainError, PrecisionCtx
from wzmahler.symbolic.pfq import pfq_eval

CTX = PrecisionCtx(bits=192)


def test_empty_sum_at_zero():
    assert pfq_eval([mpf(1) / 2, mpf(1) / 2], [1], 0, CTX) == 1


def test_4f3_telescoping_value():
    # 4F3(1,1,2,2; 2,2,3; 1): the term is 2/((n+1)(n+2)), so the sum
    # telescopes to exactly 2
    with workprec(260):
        oracle = mpf(0)
        for n in range(100000):
            oracle += mpf(2) / ((n + 1) * (n + 2))
        # partial sum error is 2/(N+2)
        val = pfq_eval([1, 1, 2, 2], [2, 2, 3], 1, CTX, tol=mpf(10) ** -30)
        assert abs(val - 2) < mpf(10) ** -29
        assert abs(oracle - 2) < mpf("2.1e-5")


def test_divergence_detection():
    with pytest.raises(DivergentSeriesError):
        pfq_eval([mpf(1) / 2, mpf(1) / 2], [1], 1, CTX)  # excess 0
    with pytest.raises(DivergentSeriesError):
        pfq_eval([1, 1], [2], mpf("1.5"), CTX)  # |z| > 1


def test_bottom_pole_rejected():
    with pytest.raises(DomainError):
        pfq_eval([1, 1], [-2], mpf(1) / 2, CTX)


def test_matches_mpmath_inside_disk():
    with workprec(260):
        cases = [
            ([mpf(1) / 2, mpf(1) / 2], [mpf(1)], mpf(9) / 25),
            ([mpf(1) / 3, mpf(2) / 3], [mpf(1)], mpf(5) / 32),
            ([mpf(1) / 4], [mpf(7) / 3], mpf(-1) / 2),
        ]
        for tops, bottoms, z in cases:
            mine = pfq_eval(tops, bottoms, z, CTX, tol=mpf(10) ** -45)
            ref = hyper(tops, bottoms, z)
            assert abs(mine - ref) < mpf(10) ** -44


def test_accelerated_unit_argument_matches_mpmath():
    with workprec(260):
        for m in (2, 5, 8):
            mine = pfq_eval([1, 1, 2 * m, 2 * m], [m + 1, m + 1, 2 * m + 1], 1,
                            CTX, tol=mpf(10) ** -18)
            ref = hyper([1, 1, 2 * m, 2 * m], [m + 1, m + 1, 2 * m + 1], 1)
            assert abs(mine - ref) < mpf(10) ** -16, f"m={m}"


def test_m2_unit_argument_exact_rational():
    # the finite identity at m = 2 forces 4F3(1,1,4,4;3,3,5;1) = 58/27
    with workprec(260):
        val = pfq_eval([1, 1, 4, 4], [3, 3, 5], 1, CTX, tol=mpf(10) ** -25)
        assert abs(val - mpf(58) / 27) < mpf(10) ** -23
