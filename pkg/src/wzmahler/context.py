"""Precision context and the error types shared by every numeric module.

All floating computation runs through mpmath.  A ``PrecisionCtx`` carries the
working mantissa size in bits, the acceptance tolerance used when two
evaluation routes are compared, and a term budget for series.  Internals add
``GUARD_BITS`` of head-room so that digits reported at ``bits`` are trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, workprec

# Exact rational scalar used throughout the exact-arithmetic modules.
Rational = Fraction

GUARD_BITS = 32


class PoleError(ArithmeticError):
    """Evaluation at a pole of Gamma or of a rational prefactor."""


class DomainError(ValueError):
    """Argument outside the documented domain of an operation."""


class ConvergenceError(ArithmeticError):
    """Term budget exhausted before the tolerance was met."""


class DivergentSeriesError(ArithmeticError):
    """The requested series diverges for the given argument."""


class NonComparableError(ValueError):
    """Two hypergeometric terms whose quotient is not a rational function."""


class QuadratureBudgetError(ArithmeticError):
    """Adaptive quadrature could not meet the tolerance within its budget."""


class RootIdentificationError(ArithmeticError):
    """No root of the modular relation matches the q-series cross-check."""


class SingularCurveError(ValueError):
    """Discriminant g2^3 - 27*g3^2 vanishes."""


class ComplexRootsUnsupportedError(ValueError):
    """Period computation requires three real roots (positive discriminant)."""


class LatticePoleError(ArithmeticError):
    """Weierstrass P evaluated at a lattice point."""


class UnknownIdentityError(KeyError):
    """Registry lookup for an id that does not exist."""


class SlowConvergenceWarning(UserWarning):
    """Series argument sits next to a branch boundary; convergence is slow."""


@dataclass(frozen=True)
class PrecisionCtx:
    """Working precision plus comparison tolerance and series budget.

    ``target_tol`` defaults to 2**(-bits/2), the tolerance used by the
    randomized property suites; registry entries override it per identity.
    """

    bits: int = 256
    target_tol: mpf = None
    max_terms: int = 500_000

    def __post_init__(self):
        if self.bits < 64:
            raise DomainError("bits must be >= 64")
        if self.max_terms <= 0:
            raise DomainError("max_terms must be positive")
        if self.target_tol is None:
            object.__setattr__(self, "target_tol", mpf(2) ** (-(self.bits // 2)))
        else:
            object.__setattr__(self, "target_tol", mpf(self.target_tol))
        if not self.target_tol > 0:
            raise DomainError("target_tol must be positive")

    def workprec(self, extra: int = 0):
        """mpmath context manager at bits + GUARD_BITS (+ extra)."""
        return workprec(self.bits + GUARD_BITS + extra)

    @property
    def eps(self) -> mpf:
        return mpf(2) ** (-self.bits)


DEFAULT_CTX = PrecisionCtx()


def ensure_ctx(ctx: PrecisionCtx | None) -> PrecisionCtx:
    return DEFAULT_CTX if ctx is None else ctx


def to_mpf(x) -> mpf:
    """mpf from int/float/str/mpf or exact Fraction (at current precision)."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)
