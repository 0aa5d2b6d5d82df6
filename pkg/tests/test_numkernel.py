"""Special-function kernel: values against independent oracles, functional
equations on random points, domain errors."""

import random

import pytest
from mpmath import (asin, catalan, exp, log, mp, mpc, mpf, pi, polylog,
                    sin, sqrt, workprec)

from wzmahler import (DomainError, PoleError, PrecisionCtx, agm, bloch_wigner,
                      gamma_real, li2_complex, zeta_int)

CTX = PrecisionCtx(bits=256)
TOL = mpf(2) ** -200


def test_gamma_classical_values():
    with workprec(300):
        assert abs(gamma_real(mpf(1) / 2, CTX) ** 2 - pi) < TOL
        assert gamma_real(5, CTX) == 24
        # pi G(x)G(x+1)/G(x+1/2)^2 at x = 1/2 equals pi^2/2:
        # G(1/2) = sqrt(pi), G(3/2) = sqrt(pi)/2, G(1) = 1
        x = mpf(1) / 2
        combo = pi * gamma_real(x, CTX) * gamma_real(x + 1, CTX) / gamma_real(x + mpf(1) / 2, CTX) ** 2
        assert abs(combo - pi ** 2 / 2) < TOL


def test_gamma_poles():
    for x in (0, -1, -7):
        with pytest.raises(PoleError):
            gamma_real(x, CTX)


def test_gamma_recurrence_and_reflection():
    rng = random.Random(11)
    with workprec(300):
        for _ in range(40):
            x = mpf(rng.uniform(0.05, 6.0))
            assert abs(gamma_real(x + 1, CTX) - x * gamma_real(x, CTX)) \
                < TOL * gamma_real(x + 1, CTX)
        # reflection on non-integer x in (0, 1)
        for _ in range(40):
            x = mpf(rng.uniform(0.02, 0.98))
            lhs = gamma_real(x, CTX) * gamma_real(1 - x, CTX)
            assert abs(lhs - pi / sin(pi * x)) < TOL * abs(lhs)


def test_li2_special_values():
    with workprec(300):
        assert li2_complex(0, CTX) == 0
        assert abs(li2_complex(1, CTX) - pi ** 2 / 6) < TOL
        # series value against the closed form at 1/2
        expected = pi ** 2 / 12 - log(mpf(2)) ** 2 / 2
        assert abs(li2_complex(mpf(1) / 2, CTX) - expected) < TOL


def test_li2_matches_independent_implementation():
    # mpmath's polylog is an independent evaluation route
    rng = random.Random(5)
    with workprec(300):
        worst = mpf(0)
        for _ in range(100):
            z = mpc(rng.uniform(-3, 3), rng.uniform(-3, 3))
            worst = max(worst, abs(li2_complex(z, CTX) - polylog(2, z)))
        assert worst < TOL
        z = exp(pi * mpc(0, 1) / 3)  # the hard point for functional equations
        assert abs(li2_complex(z, CTX) - polylog(2, z)) < TOL


def test_bloch_wigner_catalan():
    # oracle: D(i) = Im sum i^n/n^2 = sum_{m>=0} (-1)^m/(2m+1)^2
    with workprec(300):
        acc = mpf(0)
        for m in range(200):
            acc += mpf(-1) ** m / (2 * m + 1) ** 2
        # alternating series: error below first omitted term
        val = bloch_wigner(mpc(0, 1), CTX)
        assert abs(val - acc) < mpf(1) / 401 ** 2
        assert abs(val - catalan) < TOL


def test_bloch_wigner_vanishes_on_reals():
    for x in (mpf("0.7"), mpf(-3), mpf(2), mpf(0), mpf(1)):
        assert bloch_wigner(x, CTX) == 0
    assert bloch_wigner(mpc(5, 0), CTX) == 0


def test_bloch_wigner_conjugation():
    rng = random.Random(3)
    with workprec(300):
        for _ in range(30):
            z = mpc(rng.uniform(-2, 2), rng.uniform(0.01, 2))
            assert abs(bloch_wigner(z.conjugate(), CTX) + bloch_wigner(z, CTX)) < TOL


def test_agm_basic():
    with workprec(300):
        x = mpf("1.7")
        assert abs(agm(x, x, CTX) - x) < TOL
        # one-step invariance
        assert abs(agm(1, 2, CTX) - agm(mpf(3) / 2, sqrt(mpf(2)), CTX)) < TOL


def test_agm_oracle_doubled_precision():
    with workprec(600):
        a, b = mpf(1), sqrt(mpf(2))
        eps = mpf(2) ** -520
        while abs(a - b) > eps * a:
            a, b = (a + b) / 2, sqrt(a * b)
        oracle = a
    with workprec(300):
        val = agm(1, sqrt(mpf(2)), CTX)
        assert abs(val - oracle) < TOL
        assert mp.nstr(val, 9) == "1.19814023"


def test_agm_domain():
    for a, b in ((0, 1), (-1, 2), (1, 0)):
        with pytest.raises(DomainError):
            agm(a, b, CTX)


def test_zeta_values_and_oracle():
    with workprec(300):
        assert abs(zeta_int(2, CTX) - pi ** 2 / 6) < TOL
        # low-precision oracle: direct sum with integral tail bound
        direct = sum(mpf(1) / n ** 3 for n in range(1, 4001))
        tail_hi = mpf(1) / (2 * 4000 ** 2)  # int_{4000}^inf dx/x^3
        assert abs(zeta_int(3, CTX) - direct) < tail_hi
    with pytest.raises(DomainError):
        zeta_int(1, CTX)


def test_round_trips():
    rng = random.Random(17)
    with workprec(300):
        for _ in range(60):
            x = mpf(rng.uniform(-20, 20))
            assert abs(log(exp(x)) - x) < TOL * (1 + abs(x))
            y = mpf(rng.uniform(-0.999, 0.999))
            assert abs(sin(asin(y)) - y) < TOL
