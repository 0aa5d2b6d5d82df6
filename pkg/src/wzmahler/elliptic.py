"""Elliptic curves y^2 = 4x^3 - g2 x - g3 over Q: exact chord-tangent group
law and torsion orders, AGM periods, the Weierstrass functions by q-series,
and the two-sided elliptic dilogarithm lattice sums.

Curves in scope have positive discriminant (three real roots e1 > e2 > e3),
for which the full periods are

    omega  = pi / agm(sqrt(e1-e3), sqrt(e1-e2))          (real)
    omega' = i pi / agm(sqrt(e1-e3), sqrt(e2-e3))        (imaginary)

with tau = omega'/omega in the upper half plane and q = exp(2 pi i tau) in
(0, 1).  P(u) uses the Fourier expansion in z = exp(2 pi i u/omega), valid
after reducing u into the fundamental cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mpmath import exp, floor, im, mp, mpc, mpf, pi, polyroots, re, sqrt

from .context import (ComplexRootsUnsupportedError, ConvergenceError,
                      DomainError, LatticePoleError, PrecisionCtx,
                      SingularCurveError, ensure_ctx, to_mpf)
from .numkernel import agm, bloch_wigner
from .series import TermCounter


@dataclass(frozen=True)
class EllipticCurve:
    g2: Fraction
    g3: Fraction

    def __post_init__(self):
        object.__setattr__(self, "g2", Fraction(self.g2))
        object.__setattr__(self, "g3", Fraction(self.g3))
        if self.discriminant == 0:
            raise SingularCurveError(f"g2={self.g2}, g3={self.g3} is singular")

    @property
    def discriminant(self) -> Fraction:
        return self.g2 ** 3 - 27 * self.g3 ** 2

    def rhs(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        return 4 * x ** 3 - self.g2 * x - self.g3


@dataclass(frozen=True)
class CurvePoint:
    x: Fraction | None
    y: Fraction | None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    @classmethod
    def affine(cls, x, y) -> "CurvePoint":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        def fmt(v):
            return str(v.numerator) if v.denominator == 1 else str(v)
        return f"({fmt(self.x)}, {fmt(self.y)})"


INFINITY = CurvePoint.infinity()


class TorsionLocation(NamedTuple):
    """u = a*omega + b*omega' with rational a, b."""

    a: Fraction
    b: Fraction


def curve_from_family(ksq, ell) -> EllipticCurve:
    """The one-parameter family with g2 = 27(k^4-16k^2+16) l^2 and
    g3 = -27(k^6-24k^4+120k^2+64) l^3, parameterized by k^2 so that
    k = 3*sqrt(2) stays rational."""
    ksq, ell = Fraction(ksq), Fraction(ell)
    if ksq <= 0 or ell == 0:
        raise DomainError("need ksq > 0 and ell != 0")
    g2 = 27 * (ksq ** 2 - 16 * ksq + 16) * ell ** 2
    g3 = -27 * (ksq ** 3 - 24 * ksq ** 2 + 120 * ksq + 64) * ell ** 3
    return EllipticCurve(g2, g3)


def is_on_curve(curve: EllipticCurve, p: CurvePoint) -> bool:
    if p.is_infinity:
        return True
    return p.y * p.y == curve.rhs(p.x)


def point_neg(p: CurvePoint) -> CurvePoint:
    if p.is_infinity:
        return p
    return CurvePoint(p.x, -p.y)


def point_add(curve: EllipticCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent law for the 4x^3 normalization: x1+x2+x3 = lambda^2/4."""
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        lam = (12 * p.x * p.x - curve.g2) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam / 4 - p.x - q.x
    y3 = -(p.y + lam * (x3 - p.x))
    return CurvePoint(x3, y3)


def point_mul(curve: EllipticCurve, m: int, p: CurvePoint) -> CurvePoint:
    if m < 0:
        return point_mul(curve, -m, point_neg(p))
    out = INFINITY
    base = p
    while m:
        if m & 1:
            out = point_add(curve, out, base)
        base = point_add(curve, base, base)
        m >>= 1
    return out


def point_order(curve: EllipticCurve, p: CurvePoint, max_order: int = 24) -> int | None:
    """Least m <= max_order with m*P = O, else None (unknown)."""
    acc = p
    for m in range(1, max_order + 1):
        if acc.is_infinity:
            return m
        acc = point_add(curve, acc, p)
    return None


@dataclass(frozen=True)
class Periods:
    omega: mpf
    omega_prime: mpc
    tau: mpc
    q: mpf
    roots: tuple[mpf, mpf, mpf]


def periods(curve: EllipticCurve, ctx: PrecisionCtx | None = None) -> Periods:
    ctx = ensure_ctx(ctx)
    if curve.discriminant < 0:
        raise ComplexRootsUnsupportedError(
            "negative discriminant: one real root; not supported")
    with ctx.workprec(32):
        g2 = mpf(curve.g2.numerator) / curve.g2.denominator
        g3 = mpf(curve.g3.numerator) / curve.g3.denominator
        roots = polyroots([mpf(4), mpf(0), -g2, -g3], maxsteps=120, extraprec=80)
        reals = sorted((re(r) for r in roots), reverse=True)
        e1, e2, e3 = reals
        omega = pi / agm(sqrt(e1 - e3), sqrt(e1 - e2), ctx)
        omega_prime = mpc(0, 1) * pi / agm(sqrt(e1 - e3), sqrt(e2 - e3), ctx)
        tau = omega_prime / omega
        q = re(exp(2 * pi * mpc(0, 1) * tau))
        return Periods(+omega, +omega_prime, +tau, +q, (+e1, +e2, +e3))


def _reduce_to_cell(u, per: Periods) -> mpc:
    """Translate u by the lattice so that u = a*omega + b*omega' with
    a in [0,1) and b in [0,1); keeps |z| inside the q-series annulus."""
    u = mpc(u)
    a = re(u) / per.omega
    b = im(u) / im(per.omega_prime)
    return u - floor(a) * per.omega - floor(b) * per.omega_prime


def _wp_series(u, per: Periods, ctx: PrecisionCtx, derivative: bool) -> mpc:
    u = _reduce_to_cell(u, per)
    q = per.q
    z = exp(2 * pi * mpc(0, 1) * u / per.omega)
    eps = mpf(2) ** (-(ctx.bits + 24))
    if abs(1 - z) < eps:
        raise LatticePoleError("u is a lattice point")
    if derivative:
        total = z * (1 + z) / (1 - z) ** 3
    else:
        total = mpf(1) / 12 + z / (1 - z) ** 2
    n = 1
    while True:
        qn = q ** n
        a, binv = qn * z, qn / z
        if abs(1 - a) < eps or abs(1 - binv) < eps:
            raise LatticePoleError("u is a lattice point")
        if derivative:
            t = a * (1 + a) / (1 - a) ** 3 - binv * (1 + binv) / (1 - binv) ** 3
        else:
            t = a / (1 - a) ** 2 + binv / (1 - binv) ** 2 - 2 * qn / (1 - qn) ** 2
        total += t
        if n > 2 and abs(qn) * (abs(z) + 1 / abs(z) + 2) / (1 - abs(q)) < eps:
            break
        n += 1
        if n > ctx.max_terms:
            raise ConvergenceError("Weierstrass q-series budget exhausted")
    factor = 2 * pi * mpc(0, 1) / per.omega
    return (factor ** 3 if derivative else factor ** 2) * total


def wp(curve: EllipticCurve, u, ctx: PrecisionCtx | None = None,
       per: Periods | None = None) -> mpc:
    """Weierstrass P(u) via the q-series in z = exp(2 pi i u/omega)."""
    ctx = ensure_ctx(ctx)
    per = per if per is not None else periods(curve, ctx)
    with ctx.workprec(32):
        return +_wp_series(u, per, ctx, derivative=False)


def wp_prime(curve: EllipticCurve, u, ctx: PrecisionCtx | None = None,
             per: Periods | None = None) -> mpc:
    """P'(u); odd, with P'(u)^2 = 4 P(u)^3 - g2 P(u) - g3."""
    ctx = ensure_ctx(ctx)
    per = per if per is not None else periods(curve, ctx)
    with ctx.workprec(32):
        return +_wp_series(u, per, ctx, derivative=True)


def lattice_dilog_sum(z0, q, ctx: PrecisionCtx | None = None,
                      counter: TermCounter | None = None) -> mpf:
    """Two-sided sum_{n in Z} D(z0 q^n) for real q in (-1, 1), z0 != 0.

    Terms decay like |q|^|n| * (1 + |n| log(1/|q|)); summation stops once two
    consecutive symmetric shells fall below tolerance.
    """
    ctx = ensure_ctx(ctx)
    with ctx.workprec(32):
        q = to_mpf(q)
        if not 0 < abs(q) < 1:
            raise DomainError("lattice sum requires 0 < |q| < 1")
        z0 = mpc(z0)
        if z0 == 0:
            raise DomainError("z0 must be nonzero")
        eps = mpf(2) ** (-(ctx.bits + 8))
        total = bloch_wigner(z0, ctx)
        small = 0
        n = 1
        while True:
            shell = bloch_wigner(z0 * q ** n, ctx) + bloch_wigner(z0 * q ** (-n), ctx)
            total += shell
            if abs(shell) < eps:
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
            n += 1
            if 2 * n > ctx.max_terms:
                raise ConvergenceError("lattice dilogarithm sum budget exhausted")
        if counter is not None:
            counter.add(2 * n + 1)
        return +total


def elliptic_dilog(curve: EllipticCurve, loc: TorsionLocation | tuple,
                   ctx: PrecisionCtx | None = None,
                   per: Periods | None = None,
                   counter: TermCounter | None = None) -> mpf:
    """D^E at u = a*omega + b*omega': the lattice sum with z0 = e^(2 pi i a) q^b."""
    ctx = ensure_ctx(ctx)
    a, b = Fraction(loc[0]), Fraction(loc[1])
    if a == int(a) and b == int(b):
        raise DomainError("(a, b) must be nonzero mod 1")
    if (2 * a).denominator == 1:
        # e^(2 pi i a) = +-1 and q^b is real: every D term vanishes
        return mpf(0)
    per = per if per is not None else periods(curve, ctx)
    with ctx.workprec(32):
        z0 = exp(2 * pi * mpc(0, 1) * mpf(a.numerator) / a.denominator) \
            * per.q ** (mpf(b.numerator) / b.denominator)
        return lattice_dilog_sum(z0, per.q, ctx, counter=counter)
