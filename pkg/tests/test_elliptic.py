"""Exact curve arithmetic, AGM periods, Weierstrass functions and the
elliptic dilogarithm lattice sums."""

import random
from fractions import Fraction

import pytest
from mpmath import arg, exp, im, log, mp, mpc, mpf, pi, polylog, workprec

from wzmahler import (ComplexRootsUnsupportedError, DomainError, PrecisionCtx,
                      SingularCurveError)
from wzmahler.elliptic import (INFINITY, CurvePoint, EllipticCurve,
                               TorsionLocation, curve_from_family,
                               elliptic_dilog, is_on_curve, lattice_dilog_sum,
                               periods, point_add, point_mul, point_neg,
                               point_order, wp, wp_prime)

CTX = PrecisionCtx(bits=256)
TOL = mpf(2) ** -200

E1 = curve_from_family(25, 2)
E2 = curve_from_family(256, Fraction(1, 2))
E3 = curve_from_family(64, Fraction(1, 2))
E4 = curve_from_family(18, 1)
BERTIN = EllipticCurve(432, -1188)

P1 = CurvePoint.affine(87, 1080)
P2 = CurvePoint.affine(195, 432)
P3 = CurvePoint.affine(51, 216)
P4 = CurvePoint.affine(33, 324)
PB = CurvePoint.affine(-6, 54)

CURVE_POINTS = [(E1, P1), (E2, P2), (E3, P3), (E4, P4), (BERTIN, PB)]


def test_family_constants():
    assert (E1.g2, E1.g3) == (26028, -796824)
    assert (E2.g2, E2.g3) == (414828, -51418584)
    assert (E4.g2, E4.g3) == (1404, -7560)


def test_points_on_curves():
    for e, p in CURVE_POINTS:
        assert is_on_curve(e, p)
    assert not is_on_curve(E1, CurvePoint.affine(87, 1081))
    assert is_on_curve(E1, INFINITY)


def test_singular_curve_rejected():
    with pytest.raises(SingularCurveError):
        EllipticCurve(3, 1)  # g2^3 = 27 g3^2


def test_group_law_identities():
    for e, p in CURVE_POINTS:
        assert point_add(e, p, INFINITY) == p
        assert point_add(e, INFINITY, p) == p
        assert point_add(e, p, point_neg(p)) == INFINITY


def test_doubling_values():
    two_p1 = point_mul(E1, 2, P1)
    assert two_p1 == CurvePoint.affine(51, 0)  # 2-torsion
    assert point_mul(BERTIN, 2, PB) == CurvePoint.affine(12, -54)
    assert point_mul(BERTIN, 3, PB) == CurvePoint.affine(3, 0)


def test_torsion_orders():
    for e, p, order in [(E1, P1, 4), (E2, P2, 4), (E3, P3, 4), (E4, P4, 4),
                        (BERTIN, PB, 6)]:
        assert point_order(e, p) == order
        assert not point_mul(e, 2, p).is_infinity
    assert not point_mul(BERTIN, 3, PB).is_infinity
    assert point_order(E1, INFINITY) == 1


def test_group_law_associativity_random():
    rng = random.Random(23)
    for e, p in CURVE_POINTS:
        pts = [point_mul(e, m, p) for m in range(0, point_order(e, p))]
        for _ in range(10):
            a, b, c = (rng.choice(pts) for _ in range(3))
            left = point_add(e, point_add(e, a, b), c)
            right = point_add(e, a, point_add(e, b, c))
            assert left == right


def test_lemniscatic_tau():
    e = EllipticCurve(4, 0)
    per = periods(e, CTX)
    with workprec(300):
        assert abs(per.tau - mpc(0, 1)) < TOL
        assert per.roots[0] == 1 and abs(per.roots[2] + 1) < TOL


def test_periods_structure():
    for e, _ in CURVE_POINTS:
        per = periods(e, CTX)
        assert im(per.tau) > 0
        assert 0 < per.q < 1
    assert [round(float(r)) for r in periods(E1, CTX).roots] == [51, 42, -93]


def test_complex_roots_rejected():
    with pytest.raises(ComplexRootsUnsupportedError):
        periods(EllipticCurve(0, -4), CTX)  # single real root


def test_lattice_pole_rejected():
    from wzmahler import LatticePoleError
    per = periods(E1, CTX)
    with pytest.raises(LatticePoleError):
        wp(E1, mpf(0), CTX, per)
    with workprec(300):  # the lattice point must be formed at full precision
        u = per.omega + per.omega_prime
    with pytest.raises(LatticePoleError):
        wp(E1, u, CTX, per)


def test_wp_half_period_and_evenness():
    with workprec(300):
        per = periods(E1, CTX)
        assert abs(wp(E1, per.omega / 2, CTX, per) - per.roots[0]) < mpf(10) ** -60
        u = mpf("0.11") * per.omega + mpf("0.23") * per.omega_prime
        assert abs(wp(E1, u, CTX, per) - wp(E1, -u, CTX, per)) < mpf(10) ** -60


def test_wp_quarter_period_torsion_point():
    with workprec(300):
        per = periods(E1, CTX)
        x = wp(E1, per.omega / 4, CTX, per)
        y = wp_prime(E1, per.omega / 4, CTX, per)
        assert abs(x - 87) < mpf(10) ** -60
        # P'(u) is odd and P decreases on (0, omega/2), so the positive
        # y-value 1080 is attained at u = -omega/4 (equivalently 3 omega/4)
        assert abs(y + 1080) < mpf(10) ** -57
        y2 = wp_prime(E1, 3 * per.omega / 4, CTX, per)
        assert abs(y2 - 1080) < mpf(10) ** -57


def test_wp_differential_equation():
    rng = random.Random(7)
    with workprec(300):
        for e in (E1, BERTIN):
            per = periods(e, CTX)
            g2 = mpf(e.g2.numerator) / e.g2.denominator
            g3 = mpf(e.g3.numerator) / e.g3.denominator
            for _ in range(5):
                u = mpf(rng.uniform(0.05, 0.45)) * per.omega \
                    + mpf(rng.uniform(0.05, 0.45)) * per.omega_prime
                p = wp(e, u, CTX, per)
                dp = wp_prime(e, u, CTX, per)
                assert abs(dp ** 2 - (4 * p ** 3 - g2 * p - g3)) < mpf(10) ** -50


def test_wp_torsion_consistency():
    # |wp(a omega + b omega') - x(P)| < 1e-20 for every catalogued point
    locs = {id(E1): (Fraction(1, 4), Fraction(0)), id(E2): (Fraction(1, 4), Fraction(0)),
            id(E3): (Fraction(1, 4), Fraction(0)), id(E4): (Fraction(1, 4), Fraction(0)),
            id(BERTIN): (Fraction(1, 6), Fraction(-1, 2))}
    with workprec(300):
        for e, p in CURVE_POINTS:
            per = periods(e, CTX)
            a, b = locs[id(e)]
            u = mpf(a.numerator) / a.denominator * per.omega \
                + mpf(b.numerator) / b.denominator * per.omega_prime
            val = wp(e, u, CTX, per)
            assert abs(val - mpf(int(p.x))) < mpf(10) ** -20


def test_lattice_sum_basics():
    with workprec(300):
        # real z0 gives identically zero terms
        assert lattice_dilog_sum(mpf("0.37"), mpf(1) / 10, CTX) == 0
        # at tiny q the n = 0 term dominates: D(i) = Catalan, up to the
        # n = +-1 shells of size ~ 2 q log(1/q)
        from mpmath import catalan
        val = lattice_dilog_sum(mpc(0, 1), mpf(10) ** -35, CTX)
        assert abs(val - catalan) < mpf(10) ** -30


def test_lattice_sum_oracle_doubled_precision():
    # independent route: mpmath polylog-based D, explicit two-sided window,
    # at doubled precision
    q = mpf(1) / 10
    with workprec(600):
        def dd(z):
            if im(z) == 0:
                return mpf(0)
            return im(polylog(2, z)) + arg(1 - z) * log(abs(z))
        oracle = sum(dd(mpc(0, 1) * mpf(q) ** n) for n in range(-220, 221))
    with workprec(300):
        val = lattice_dilog_sum(mpc(0, 1), q, CTX)
        assert abs(val - oracle) < mpf(10) ** -70


def test_elliptic_dilog_locations():
    with workprec(300):
        per = periods(E1, CTX)
        # (1/2, 0) means z0 = -1, a real point: the sum vanishes
        assert elliptic_dilog(E1, (Fraction(1, 2), Fraction(0)), CTX, per=per) == 0
        with pytest.raises(DomainError):
            elliptic_dilog(E1, (Fraction(0), Fraction(0)), CTX, per=per)
        loc = TorsionLocation(Fraction(1, 4), Fraction(0))
        direct = lattice_dilog_sum(mpc(0, 1), per.q, CTX)
        assert abs(elliptic_dilog(E1, loc, CTX, per=per) - direct) < TOL


def test_bertin_q_matches_signature3_nome():
    # two fully independent routes to the same nome: AGM periods of the
    # curve vs the signature-3 hypergeometric quotient at beta = 5/32
    from wzmahler.modular import q3_from_beta
    with workprec(300):
        per = periods(BERTIN, CTX)
        q3 = q3_from_beta(Fraction(5, 32), CTX)
        assert abs(per.q - q3) < mpf(10) ** -70


def test_bertin_location_identity():
    # z0 at u = (omega - 3 omega')/6 equals e^(i pi/3) q^(-1/2), so D^E(P)
    # equals the half-integer-exponent lattice sum
    with workprec(300):
        per = periods(BERTIN, CTX)
        u = (per.omega - 3 * per.omega_prime) / 6
        z0 = exp(2 * pi * mpc(0, 1) * u / per.omega)
        z0b = exp(pi * mpc(0, 1) / 3) * per.q ** mpf("-0.5")
        assert abs(z0 - z0b) < mpf(10) ** -70
        via_loc = elliptic_dilog(BERTIN, (Fraction(1, 6), Fraction(-1, 2)), CTX, per=per)
        direct = lattice_dilog_sum(z0b, per.q, CTX)
        assert abs(via_loc - direct) < mpf(10) ** -70
