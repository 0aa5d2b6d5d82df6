"""Two independent evaluators for the Mahler measures m(alpha) and n(alpha).

m(alpha) = m(alpha + x + 1/x + y + 1/y) has central-binomial series on both
sides of alpha = 4:

    m(4/r) = log(4/r) - sum_{n>=1} C(2n,n)^2 (r/4)^(2n) / (2n)
    m(4r)  = 4 sum_{n>=0} C(2n,n)^2 (r/4)^(2n+1) / (2n+1),      r in (0, 1]

and a quadrature oracle via Jensen's formula in x: with u(t) = alpha +
2 cos(2 pi t) the inner integral is arccosh(|u|/2) where |u| >= 2 and zero
otherwise.  n(alpha) = m(x^3 + y^3 + 1 - alpha x y) only has the quadrature
route here: the cubic in x is monic, so Jensen gives the sum of log+ of the
root magnitudes.

The square-root kinks where a root magnitude crosses 1 are located first
(bisection on the product of |root|-1) and made interval endpoints, which is
what keeps tanh-sinh quadrature at full speed.
"""

from __future__ import annotations

import warnings

from mpmath import (acos, acosh, cos, exp, fabs, log, mp, mpc, mpf, pi,
                    polyroots, quad, workprec)

from .context import (DivergentSeriesError, DomainError, PrecisionCtx,
                      QuadratureBudgetError, SlowConvergenceWarning,
                      ensure_ctx, to_mpf)
from .series import TermCounter, richardson_sum, sum_geometric

_ACCEL_THRESHOLD = mpf("0.9")  # switch to Richardson when r^2 exceeds this


def _csq_terms(r: mpf):
    """Yield C(2n,n)^2 (r/4)^(2n) for n = 0, 1, 2, ...; ratio < r^2."""
    c = mpf(1)
    n = 0
    while True:
        yield c
        c = c * ((2 * n + 1) ** 2 * r * r) / (4 * (n + 1) ** 2)
        n += 1


def m_series(alpha, ctx: PrecisionCtx | None = None, tol=None,
             counter: TermCounter | None = None) -> mpf:
    """m(alpha) by the branch-appropriate binomial series."""
    ctx = ensure_ctx(ctx)
    with ctx.workprec(32):
        alpha = to_mpf(alpha)
        if alpha <= 0:
            raise DomainError("m_series requires alpha > 0")
        tol = mpf(tol) if tol is not None else min(ctx.target_tol, mpf(10) ** -40)
        rodriguez = alpha >= 4
        r = 4 / alpha if rodriguez else alpha / 4
        rsq = r * r
        if abs(alpha - 4) < mpf("1e-3") and alpha != 4:
            warnings.warn("alpha within 1e-3 of the branch point 4; series "
                          "converges like 1/n^2", SlowConvergenceWarning)
        if rsq > _ACCEL_THRESHOLD:
            return +_m_series_accel(alpha, rodriguez, r, tol, ctx, counter)

        gen = _csq_terms(r)
        if rodriguez:
            first = next(gen)  # n = 0 term is excluded from the sum
            if counter is not None:
                counter.add(1)
            terms = (c / (2 * n) for n, c in enumerate(gen, start=1))
            s = sum_geometric(terms, tol, ratio=rsq, max_terms=ctx.max_terms,
                              counter=counter)
            return +(log(alpha) - s)
        terms = (r * c / (2 * n + 1) for n, c in enumerate(gen))
        s = sum_geometric(terms, tol, ratio=rsq, max_terms=ctx.max_terms,
                          counter=counter)
        return +s


def _m_series_accel(alpha, rodriguez, r, tol, ctx, counter):
    state = {}

    def term(n):
        if n == 0:
            state["c"] = mpf(1)
            state["r"] = mpf(r)
        c, rr = state["c"], state["r"]
        state["c"] = c * ((2 * n + 1) ** 2 * rr * rr) / (4 * (n + 1) ** 2)
        if rodriguez:
            return c / (2 * (n + 1)) * ((2 * n + 1) ** 2 * rr * rr) / (4 * (n + 1) ** 2)
        return rr * c / (2 * n + 1)

    if rodriguez:
        # term(n) above yields c_{n+1}/(2(n+1)) so the sum starts at n = 1
        s = richardson_sum(term, tol, max_terms=ctx.max_terms, counter=counter)
        return log(alpha) - s
    return richardson_sum(term, tol, max_terms=ctx.max_terms, counter=counter)


def s_ratio(r, ctx: PrecisionCtx | None = None) -> mpf:
    """s = m(4/r)/m(4r) for r in (0, 1]."""
    ctx = ensure_ctx(ctx)
    with ctx.workprec(32):
        r = to_mpf(r)
        if not 0 < r <= 1:
            raise DomainError("s_ratio requires r in (0, 1]")
        return +(m_series(4 / r, ctx) / m_series(4 * r, ctx))


def rv_series(x, ctx: PrecisionCtx | None = None, tol=None,
              counter: TermCounter | None = None) -> mpf:
    """sum_{n>=1} (3n)!/(n n!^3) x^n; requires 27|x| < 1.

    The term ratio is 27x * n(n+1/3)(n+2/3)/(n+1)^3, strictly below 27|x|,
    so the geometric tail bound is rigorous even at ratios near 1.
    """
    ctx = ensure_ctx(ctx)
    with ctx.workprec(32):
        x = to_mpf(x)
        rho = 27 * abs(x)
        if rho >= 1:
            raise DivergentSeriesError("rv_series needs |27x| < 1")
        tol = mpf(tol) if tol is not None else ctx.target_tol

        def terms():
            t = 6 * x
            n = 1
            while True:
                yield t
                t = t * (3 * n + 1) * (3 * n + 2) * (3 * n + 3) * n * x / mpf(n + 1) ** 4
                n += 1

        return +sum_geometric(terms(), tol, ratio=rho, max_terms=ctx.max_terms,
                              counter=counter)


# ---------------------------------------------------------------------------
# quadrature oracles
# ---------------------------------------------------------------------------

def _quad_pieces(f, points, tol, depth: int = 0):
    """tanh-sinh on each piece; bisect pieces whose error estimate is too big."""
    total = mpf(0)
    for a, b in zip(points, points[1:]):
        val, err = quad(f, [a, b], error=True)
        if err > tol * mpf("0.25") and depth < 12:
            total += _quad_pieces(f, [a, (a + b) / 2, b], tol, depth + 1)
        elif err > tol * mpf("0.25"):
            raise QuadratureBudgetError(
                f"interval [{mp.nstr(a, 8)}, {mp.nstr(b, 8)}] stuck at "
                f"error {mp.nstr(err, 3)}")
        else:
            total += val
    return total


def m_quadrature(alpha, ctx: PrecisionCtx | None = None, tol=mpf("1e-8")) -> mpf:
    """Jensen-reduced integral for m(alpha), alpha >= 0.

    Splits at the |u| = 2 crossing (square-root kink) and doubles the
    integral over [0, 1/2] by the t -> 1-t symmetry.
    """
    ctx = ensure_ctx(ctx)
    tol = mpf(tol)
    prec = max(140, int(-mp.log(tol, 2)) + 80)
    with workprec(prec):
        alpha = to_mpf(alpha)
        if alpha < 0:
            raise DomainError("m_quadrature requires alpha >= 0")

        def f(t):
            u = alpha + 2 * cos(2 * pi * t)
            au = fabs(u)
            if au <= 2:
                return mpf(0)
            return acosh(au / 2)

        points = [mpf(0), mpf(1) / 2]
        if 0 < alpha < 4:
            tstar = acos((2 - alpha) / 2) / (2 * pi)
            points = [mpf(0), tstar, mpf(1) / 2]
        return +(2 * _quad_pieces(f, points, tol / 2))


def _cubic_root_mags(alpha, t):
    y = exp(2 * pi * mpc(0, 1) * t)
    roots = polyroots([mpf(1), mpf(0), -alpha * y, 1 + y ** 3],
                      maxsteps=160, extraprec=80)
    return [abs(r) for r in roots]


def _n_breakpoints(alpha, grid: int = 192) -> list:
    """Zeros in (0, 1/2) of prod(|root|-1), located by bisection."""
    def s(t):
        prod = mpf(1)
        for m in _cubic_root_mags(alpha, t):
            prod *= m - 1
        return prod

    pts = [mpf(i) / (2 * grid) for i in range(grid + 1)]
    vals = [s(t) for t in pts]
    found = []
    for (a, va), (b, vb) in zip(zip(pts, vals), zip(pts[1:], vals[1:])):
        if va == 0:
            found.append(a)
            continue
        if va * vb < 0:
            lo, hi, vlo = a, b, va
            for _ in range(mp.prec // 2):
                mid = (lo + hi) / 2
                vm = s(mid)
                if vm == 0:
                    break
                if vm * vlo < 0:
                    hi = mid
                else:
                    lo, vlo = mid, vm
            found.append((lo + hi) / 2)
    return found


def n_quadrature(alpha, ctx: PrecisionCtx | None = None, tol=mpf("1e-8")) -> mpf:
    """Jensen-reduced integral for n(alpha) = m(x^3 + y^3 + 1 - alpha x y).

    The cubic in x is monic, so the inner integral is sum_i log+ |r_i(t)|;
    root magnitudes come from polished cubic roots at each node.
    """
    ctx = ensure_ctx(ctx)
    tol = mpf(tol)
    prec = max(140, int(-mp.log(tol, 2)) + 80)
    with workprec(prec):
        alpha = to_mpf(alpha)
        if alpha < 0:
            raise DomainError("n_quadrature requires alpha >= 0")

        def f(t):
            total = mpf(0)
            for m in _cubic_root_mags(alpha, t):
                if m > 1:
                    total += log(m)
            return total

        inner = sorted(_n_breakpoints(alpha))
        points = [mpf(0)] + inner + [mpf(1) / 2]
        return +(2 * _quad_pieces(f, points, tol / 2))
