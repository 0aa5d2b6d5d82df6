"""Bertin's exotic relation 16 D^E(P) = 11 D^E(2P) on y^2 = 4x^3 - 432x + 1188,
walked through all of its equivalent forms.

The point P = (-6, 54) has order 6 and sits at u = (omega - 3 omega')/6, so
D^E(P) is a lattice sum over e^(i pi/3) q^(n - 1/2).  The nome q is also
reachable through Ramanujan's signature-3 theory at beta = 5/32, which leads
to the cubic-field evaluation x(sqrt q) = (7 + sqrt 5)^3/108 via the degree-2
modular relation, the n(alpha) quadrature identity, and finally an explicit
(3n)!/(n n!^3) series.
"""

from fractions import Fraction

from mpmath import cbrt, log, mp, mpf, sqrt, workprec

from wzmahler import PrecisionCtx
from wzmahler.elliptic import (EllipticCurve, CurvePoint, elliptic_dilog,
                               periods, point_mul, point_order)
from wzmahler.mahler import n_quadrature, rv_series
from wzmahler.modular import j3_from_beta, modular_poly_solve, q3_from_beta, xq_product

ctx = PrecisionCtx(bits=256)

with workprec(300):
    e = EllipticCurve(432, -1188)
    p = CurvePoint.affine(-6, 54)
    print(f"curve: y^2 = 4x^3 - {e.g2}x + {-e.g3};  P = {p},"
          f" order {point_order(e, p)}; 2P = {point_mul(e, 2, p)}")

    per = periods(e, ctx)
    d_p = elliptic_dilog(e, (Fraction(1, 6), Fraction(-1, 2)), ctx, per=per)
    d_2p = elliptic_dilog(e, (Fraction(1, 3), Fraction(0)), ctx, per=per)
    print("  |16 D^E(P) - 11 D^E(2P)| =", mp.nstr(abs(16 * d_p - 11 * d_2p), 5))

    # the same q from the signature-3 theory
    beta = Fraction(5, 32)
    q3 = q3_from_beta(beta, ctx)
    print("\nsignature-3 parameterization:")
    print("  g2^3/(g2^3 - 27 g3^2) =", j3_from_beta(beta), "(so beta = 5/32)")
    print("  |q(periods) - q(beta)| =", mp.nstr(abs(per.q - q3), 5))
    print("  x(q) =", mp.nstr(xq_product(q3, ctx), 25), " = 32/27")

    alpha_root, gamma_root = modular_poly_solve(beta, ctx)
    s5 = sqrt(mpf(5))
    print("  x(sqrt q) =", mp.nstr(1 / (1 - alpha_root), 25),
          " = (7+sqrt5)^3/108 =", mp.nstr((7 + s5) ** 3 / 108, 25))

    # the n(alpha) form, with each side an adaptive Jensen quadrature
    a1 = (7 + s5) / cbrt(mpf(4))
    a2 = (7 - s5) / cbrt(mpf(4))
    a3 = cbrt(mpf(32))
    lhs = 16 * n_quadrature(a1, ctx) - 8 * n_quadrature(a2, ctx)
    rhs = 19 * n_quadrature(a3, ctx)
    print("\nquadrature form: |16 n(a1) - 8 n(a2) - 19 n(a3)| =",
          mp.nstr(abs(lhs - rhs), 5))

    # explicit series form; the third base is 1/(27 x(q)) = 1/32
    u1, u2, u3 = 4 / (7 + s5) ** 3, 4 / (7 - s5) ** 3, mpf(1) / 32
    series = 16 * rv_series(u1, ctx, tol=mpf(10) ** -9) \
        - 8 * rv_series(u2, ctx, tol=mpf(10) ** -9) \
        - 19 * rv_series(u3, ctx, tol=mpf(10) ** -9)
    closed = 3 * log((7 + s5) ** 24 / (mpf(2) ** 53 * mpf(11) ** 8))
    print("series form:     |sum - 3 log((7+sqrt5)^24/(2^53 11^8))| =",
          mp.nstr(abs(series - closed), 5))
    print("(27 u2 =", mp.nstr(27 * u2, 8), "- the slow term of the series)")
