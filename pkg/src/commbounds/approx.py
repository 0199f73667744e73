"""Gaussian-antiderivative approximation bound for f(x) = x / (x + 1).

A smooth approximant of the test function f1(x) = x / (x + 1) is built by
integrating a scaled Gaussian kernel G(x) = a * exp(-b * x^2), which gives
g(x) = (a / 2) * sqrt(pi / b) * erf(sqrt(b) * x).  The residual
j = f1 - g oscillates on the half line.  Its validated oscillation, a
safety margin covering the root-location windows, and a linear term in
the evaluation point combine into a certified upper bound for the
normalized approximation functional at that point.

Critical points of j are located through the sign-equivalent function
phi(x) = b * x^2 - 2 * log(x + 1) - log(a), which is strictly convex on
(-1, inf) and therefore easy to bracket, and every root is re-validated
directly on j' before it is used.
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "DomainViolation",
    "NoSignChange",
    "RootValidationFailed",
    "GaussianParams",
    "ToleranceConfig",
    "ErfMinOutcome",
    "DEGENERATE_VALUE",
    "f1",
    "erf",
    "gauss",
    "gauss_mass",
    "g_erf",
    "j_func",
    "j_prime",
    "j_limit",
    "phi",
    "x_star",
    "x_end",
    "bracketed_root",
    "erf_min_bound",
]

DEGENERATE_VALUE = 10.0

_EPS = sys.float_info.epsilon


class DomainViolation(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoSignChange(RuntimeError):
    """A bracketing interval does not straddle a sign change."""


class RootValidationFailed(RuntimeError):
    """A computed critical point failed its derivative sign checks."""


@dataclass(frozen=True)
class GaussianParams:
    """Amplitude a and inverse squared width b of the Gaussian kernel."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise DomainViolation(f"amplitude a must be positive and finite, got {self.a!r}")
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise DomainViolation(f"width parameter b must be positive and finite, got {self.b!r}")


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances used when locating and validating roots.

    root_tol is the half width of the safety window around each critical
    point (it also sets the root finder resolution at one tenth of its
    value), and comp_tol is the strict margin required of the derivative
    signs at the window edges.
    """

    root_tol: float = 1e-5
    comp_tol: float = 1e-10

    def __post_init__(self) -> None:
        if not (0.0 < self.comp_tol < self.root_tol):
            raise DomainViolation(
                f"tolerances must satisfy 0 < comp_tol < root_tol, got {self.comp_tol!r}, {self.root_tol!r}"
            )


@dataclass(frozen=True)
class ErfMinOutcome:
    """Pointwise bound together with the certified critical points.

    value is the bound itself; x1 and x2 are the validated local maximum
    and local minimum of the residual (x1 is None when the amplitude is
    at least one, both are None in the degenerate case); error_budget is
    the additive safety margin 2 * (1 + a) * root_tol; degenerate flags
    the sentinel outcome.
    """

    value: float
    x1: float | None
    x2: float | None
    error_budget: float
    degenerate: bool

    @property
    def roots(self) -> tuple[float | None, float] | None:
        """Return the critical-point pair (x1, x2), or None when degenerate."""
        if self.degenerate:
            return None
        assert self.x2 is not None
        return (self.x1, self.x2)


def f1(x: float) -> float:
    """Evaluate the test function x / (x + 1)."""
    if x <= -1.0:
        raise DomainViolation(f"f1 requires x > -1, got {x!r}")
    return x / (x + 1.0)


def erf(x: float) -> float:
    """Evaluate the error function (2 / sqrt(pi)) * integral of e^(-t^2) on [0, x]."""
    return math.erf(x)


def gauss(x: float, params: GaussianParams) -> float:
    """Evaluate the Gaussian kernel a * exp(-b * x^2)."""
    return params.a * math.exp(-params.b * x * x)


def gauss_mass(params: GaussianParams) -> float:
    """Return the half-line integral of the kernel, (a / 2) * sqrt(pi / b)."""
    return 0.5 * params.a * math.sqrt(math.pi / params.b)


def g_erf(x: float, params: GaussianParams) -> float:
    """Evaluate the kernel antiderivative (a / 2) * sqrt(pi / b) * erf(sqrt(b) * x)."""
    return gauss_mass(params) * math.erf(math.sqrt(params.b) * x)


def j_func(x: float, params: GaussianParams) -> float:
    """Evaluate the residual j(x) = f1(x) - g(x)."""
    return f1(x) - g_erf(x, params)


def j_prime(x: float, params: GaussianParams) -> float:
    """Evaluate j'(x) = 1 / (x + 1)^2 - a * exp(-b * x^2)."""
    if x <= -1.0:
        raise DomainViolation(f"j_prime requires x > -1, got {x!r}")
    u = x + 1.0
    return 1.0 / (u * u) - gauss(x, params)


def j_limit(params: GaussianParams) -> float:
    """Return the limit of j at infinity, 1 - (a / 2) * sqrt(pi / b)."""
    return 1.0 - gauss_mass(params)


def phi(x: float, params: GaussianParams) -> float:
    """Evaluate b * x^2 - 2 * log(x + 1) - log(a).

    On (-1, inf) this expression has the same sign as j'(x), but unlike
    j' it is strictly convex, so it has a single interior minimizer and
    at most two roots, which makes bracketing reliable.
    """
    if x <= -1.0:
        raise DomainViolation(f"phi requires x > -1, got {x!r}")
    return params.b * x * x - 2.0 * math.log1p(x) - math.log(params.a)


def x_star(b: float) -> float:
    """Return the minimizer of phi, the positive root of x^2 + x - 1 / b."""
    if not (math.isfinite(b) and b > 0.0):
        raise DomainViolation(f"x_star requires b > 0, got {b!r}")
    return 0.5 * (-1.0 + math.sqrt(1.0 + 4.0 / b))


def x_end(params: GaussianParams) -> float:
    """Return a point to the right of every root of phi where phi > 0.

    Since log(1 + x) <= x, phi dominates the quadratic b*x^2 - 2*x - log(a),
    whose larger root (1 + sqrt(1 + b * log(a))) / b serves as a seed; a
    negative radicand clamps the square root to zero.  The seed is doubled
    (at most 60 times) until phi is strictly positive there.
    """
    a, b = params.a, params.b
    radicand = 1.0 + b * math.log(a)
    if radicand > 0.0:
        shift = math.sqrt(radicand)
    else:
        warnings.warn(
            "x_end radicand 1 + b*log(a) is negative; square-root term clamped to zero",
            RuntimeWarning,
            stacklevel=2,
        )
        shift = 0.0
    point = (1.0 + shift) / b
    for _ in range(61):
        if phi(point, params) > 0.0:
            return point
        point *= 2.0
    raise NoSignChange("phi stayed nonpositive along the entire doubling sequence")


def bracketed_root(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    tol: ToleranceConfig | None = None,
    maxiter: int = 200,
) -> float:
    """Find a root of func on [lo, hi] with Brent's method.

    The endpoint values must have strictly opposite signs, otherwise
    NoSignChange is raised.  The convergence window is one tenth of
    tol.root_tol, so the returned point sits well inside the +-root_tol
    validation window used downstream.  The combination of bisection,
    secant and inverse quadratic steps is fully deterministic with a
    hard cap of maxiter iterations.
    """
    if tol is None:
        tol = ToleranceConfig()
    xtol = 0.1 * tol.root_tol
    a, b = lo, hi
    fa, fb = func(a), func(b)
    if fa == 0.0 or fb == 0.0 or (fa > 0.0) == (fb > 0.0):
        raise NoSignChange(f"no strict sign change on [{lo!r}, {hi!r}]")
    c, fc = a, fa
    d = e = b - a
    for _ in range(maxiter):
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * _EPS * abs(b) + 0.5 * xtol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += math.copysign(tol1, xm)
        fb = func(b)
    raise RootValidationFailed(f"root finder did not converge within {maxiter} iterations")


def _validate_local_minimum(root: float, params: GaussianParams, tol: ToleranceConfig) -> None:
    t, eps = tol.root_tol, tol.comp_tol
    if root - t < eps:
        raise DomainViolation(f"validation window around {root!r} leaves the domain")
    if not (j_prime(root - t, params) <= -eps and j_prime(root + t, params) >= eps):
        raise RootValidationFailed(f"derivative signs around {root!r} do not confirm a local minimum")


def _validate_local_maximum(root: float, params: GaussianParams, tol: ToleranceConfig) -> None:
    t, eps = tol.root_tol, tol.comp_tol
    if root - t < eps:
        raise DomainViolation(f"validation window around {root!r} leaves the domain")
    if not (j_prime(root - t, params) >= eps and j_prime(root + t, params) <= -eps):
        raise RootValidationFailed(f"derivative signs around {root!r} do not confirm a local maximum")


def erf_min_bound(
    c: float,
    params: GaussianParams,
    tol: ToleranceConfig | None = None,
) -> ErfMinOutcome:
    """Bound the normalized approximation functional at the point c.

    The certified quantity is (osc(j) + 2 * (1 + a) * root_tol + c * a)
    divided by f1(c), where osc(j) is the oscillation of the residual on
    [0, inf) computed from its validated critical points, the middle term
    is a safety margin that covers the root-location windows, and c * a
    accounts for the kernel amplitude at the origin.

    When phi is nonnegative at its minimizer the residual has no interior
    critical points and the construction certifies nothing useful, so the
    sentinel value 10 is returned with degenerate=True.
    """
    if not (math.isfinite(c) and c > 0.0):
        raise DomainViolation(f"evaluation point c must be positive and finite, got {c!r}")
    if tol is None:
        tol = ToleranceConfig()

    a = params.a
    budget = 2.0 * (1.0 + a) * tol.root_tol
    xs = x_star(params.b)
    if phi(xs, params) >= 0.0:
        return ErfMinOutcome(DEGENERATE_VALUE, None, None, budget, True)

    sign_func = lambda x: phi(x, params)  # noqa: E731

    x2 = bracketed_root(sign_func, xs, x_end(params), tol)
    _validate_local_minimum(x2, params, tol)

    if a < 1.0:
        x1 = bracketed_root(sign_func, 0.0, xs, tol)
        _validate_local_maximum(x1, params, tol)
        high = max(j_func(x1, params), j_limit(params))
        low = min(0.0, j_func(x2, params))
    else:
        x1 = None
        high = max(0.0, j_limit(params))
        low = j_func(x2, params)

    value = ((high - low) + budget + c * a) / f1(c)
    return ErfMinOutcome(value, x1, x2, budget, False)
