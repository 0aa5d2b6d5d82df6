"""Theta function, eta-quotient x(q), q-inversion in both signatures, the
J-expressions, and the degree-2 modular relation."""

import random
from fractions import Fraction

import pytest
from mpmath import exp, gamma, mp, mpf, pi, sqrt, workprec

from wzmahler import DomainError, PrecisionCtx
from wzmahler.elliptic import curve_from_family
from wzmahler.modular import (beta2_from_q, j3_from_beta, j_from_beta2,
                              modular_poly_solve, modular_relation, phi_theta,
                              q3_from_beta, q_from_beta2, xq_product)

CTX = PrecisionCtx(bits=256)
TOL = mpf(2) ** -200


def test_phi_basic():
    assert phi_theta(0, CTX) == 1
    with workprec(300):
        # classical value at q = e^(-pi): phi = pi^(1/4)/Gamma(3/4)
        val = phi_theta(exp(-pi), CTX)
        assert abs(val - pi ** (mpf(1) / 4) / gamma(mpf(3) / 4)) < TOL
        # doubled-precision direct-sum oracle
        with workprec(700):
            q = exp(-pi)
            oracle = 1 + 2 * sum(q ** (n * n) for n in range(1, 40))
        assert abs(val - oracle) < TOL


def test_phi_product_inequality():
    with workprec(300):
        for q in (mpf(1) / 10, mpf(1) / 3, mpf(7) / 10):
            assert phi_theta(q, CTX) * phi_theta(-q, CTX) <= phi_theta(q, CTX) ** 2


def test_xq_basic_and_bertin_values():
    assert xq_product(0, CTX) == 1
    with workprec(300):
        q0 = q3_from_beta(Fraction(5, 32), CTX)
        assert abs(xq_product(q0, CTX) - mpf(32) / 27) < TOL
        s5 = sqrt(mpf(5))
        assert abs(xq_product(sqrt(q0), CTX) - (7 + s5) ** 3 / 108) < TOL
        assert abs(xq_product(q0 ** 2, CTX) - (7 - s5) ** 3 / 108) < TOL


def test_q_inversion_signature2():
    rng = random.Random(31)
    with workprec(300):
        assert abs(q_from_beta2(Fraction(1, 2), CTX) - exp(-pi)) < TOL
        # round-trip through the theta quotient, fixed and random samples
        betas = [Fraction(9, 25)] + [mpf(rng.uniform(0.05, 0.95)) for _ in range(10)]
        for beta in betas:
            q = q_from_beta2(beta, CTX)
            back = beta2_from_q(q, CTX)
            want = mpf(beta.numerator) / beta.denominator \
                if isinstance(beta, Fraction) else beta
            assert abs(back - want) < TOL


def test_q_inversion_signature3():
    with workprec(300):
        assert abs(q3_from_beta(Fraction(1, 2), CTX) - exp(-2 * pi / sqrt(mpf(3)))) < TOL


def test_q_inversion_domain():
    for beta in (0, 1, -2, 2):
        with pytest.raises(DomainError):
            q_from_beta2(beta, CTX)


def test_theta_involution():
    # phi^4(-q)/phi^4(q) at q = e^(-pi x) and at e^(-pi/x) sum to 1
    with workprec(300):
        for x in (mpf(1) / 2, mpf(1), mpf(2)):
            a = (phi_theta(-exp(-pi * x), CTX) / phi_theta(exp(-pi * x), CTX)) ** 4
            b = (phi_theta(-exp(-pi / x), CTX) / phi_theta(exp(-pi / x), CTX)) ** 4
            assert abs(a + b - 1) < TOL


def test_j_from_beta2_against_curves():
    # beta = 1 - 16/k^2 must reproduce g2^3/(g2^3 - 27 g3^2) of the family
    for ksq in (Fraction(25), Fraction(64), Fraction(256)):
        beta = 1 - Fraction(16) / ksq
        jval = j_from_beta2(beta)
        for ell in (Fraction(2), Fraction(1, 2), Fraction(3)):
            e = curve_from_family(ksq, ell)
            assert jval == e.g2 ** 3 / (e.g2 ** 3 - 27 * e.g3 ** 2)


def test_j3_bertin_value():
    assert j3_from_beta(Fraction(5, 32)) == Fraction(256, 135)
    # and it matches the Bertin curve's invariant exactly
    g2, g3 = Fraction(432), Fraction(-1188)
    assert j3_from_beta(Fraction(5, 32)) == g2 ** 3 / (g2 ** 3 - 27 * g3 ** 2)


def test_j3_pole_structure():
    # (1-b)^3 * j3(b) = (1+8b)^3/(64b) exactly, finite as b -> 1
    for beta in (Fraction(9, 10), Fraction(99, 100), Fraction(999, 1000)):
        assert (1 - beta) ** 3 * j3_from_beta(beta) == (1 + 8 * beta) ** 3 / (64 * beta)
    assert (1 + 8 * Fraction(1)) ** 3 / 64 == Fraction(729, 64)


def test_j_domain_errors():
    for f in (j_from_beta2, j3_from_beta):
        with pytest.raises(DomainError):
            f(Fraction(0))
        with pytest.raises(DomainError):
            f(Fraction(1))


def test_modular_relation_trivia():
    assert modular_relation(Fraction(0), Fraction(0)) == 0
    # symmetry under swapping the arguments
    a, b = Fraction(3, 7), Fraction(2, 11)
    assert modular_relation(a, b) == modular_relation(b, a)


def test_modular_poly_solve_bertin():
    with workprec(300):
        alpha, gamma_root = modular_poly_solve(Fraction(5, 32), CTX)
        s5 = sqrt(mpf(5))
        assert abs(1 / (1 - alpha) - (7 + s5) ** 3 / 108) < mpf(10) ** -60
        assert abs(1 / (1 - gamma_root) - (7 - s5) ** 3 / 108) < mpf(10) ** -60
        # plugging (beta, alpha) back in yields 0 at tolerance
        b = mpf(5) / 32
        assert abs(modular_relation(alpha, b)) < mpf(10) ** -55
        assert abs(modular_relation(gamma_root, b)) < mpf(10) ** -55


def test_degree2_consistency_random_beta():
    rng = random.Random(9)
    ctx = PrecisionCtx(bits=192)
    with workprec(240):
        for _ in range(4):
            beta = mpf(rng.uniform(0.1, 0.9))
            q = q3_from_beta(beta, ctx)
            for arg in (q ** mpf("0.5"), q ** 2):
                val = 1 - 1 / xq_product(arg, ctx)
                assert abs(modular_relation(val, beta)) < mpf(2) ** -96
