"""Stitch pointwise constants into interval and global certificates.

A grid of certified pairs (c_k, C_k) only bounds the ratio at the grid
nodes.  The continuity lemma lifts each node to the interval up to the
next node at the price of the factor (c_{k+1}+1)/(c_k+1); two corner
bounds cover (0, c_1] and [c_n, inf).  The maximum of the lifted and
corner values is a constant valid for every c > 0.  The same grid also
feeds the integral representation of the square root, which turns the
C_k into a single constant for the sqrt commutator inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from scipy.integrate import quad

from commbounds.approx import DEGENERATE_VALUE, DomainViolation, GaussianParams
from commbounds.formulas import csc1, scaled_cayley_Cc
from commbounds.optimize import BoundPoint

__all__ = [
    "ArgumentOrder",
    "CoverageGap",
    "DegenerateNode",
    "StitchedCertificate",
    "continuity_lift",
    "corner_large",
    "corner_small",
    "gamma_half_integrand",
    "gamma_half_via_Cc",
    "global_constant",
    "sqrt_constant",
    "stitch",
]


class ArgumentOrder(ValueError):
    """Interval endpoints were supplied in the wrong order."""


class CoverageGap(ValueError):
    """The point grid does not cover the required interval."""


class DegenerateNode(ValueError):
    """A node carries the degenerate sentinel instead of a certificate."""


@dataclass(frozen=True)
class StitchedCertificate:
    """Certificate of a uniform bound assembled from grid nodes.

    lifted[k] is the node constant C_k pushed forward to the interval
    [c_k, c_{k+1}] (the last node uses c_n + max spacing).  The corner
    fields are None for certificates produced by stitch() alone, which
    cover only [c_1, c_n + max spacing]; global_constant() fills them in
    and extends the coverage to all c > 0.
    """

    points: tuple[BoundPoint, ...]
    lifted: tuple[float, ...]
    corner_small: float | None
    corner_large: float | None
    global_C: float

    def to_dict(self) -> dict:
        """Plain-types payload; floats survive a JSON round trip exactly."""
        return {
            "grid": [p.c for p in self.points],
            "C_k": [p.C_k for p in self.points],
            "D_k": list(self.lifted),
            "params": [[p.params.a, p.params.b] for p in self.points],
            "corner_small": self.corner_small,
            "corner_large": self.corner_large,
            "global_C": self.global_C,
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> "StitchedCertificate":
        grid = payload["grid"]
        constants = payload["C_k"]
        params = payload["params"]
        if not (len(grid) == len(constants) == len(params)):
            raise CoverageGap("grid, C_k and params must have equal lengths")
        points = tuple(
            BoundPoint(
                float(c),
                float(C),
                GaussianParams(float(ab[0]), float(ab[1])),
                float(C) == DEGENERATE_VALUE,
            )
            for c, C, ab in zip(grid, constants, params)
        )
        return cls(
            points,
            tuple(float(d) for d in payload["D_k"]),
            payload["corner_small"],
            payload["corner_large"],
            float(payload["global_C"]),
        )


def continuity_lift(C: float, c: float, d: float) -> float:
    """Lift the bound C at c to any d >= c: D = C (d+1)/(c+1)."""
    if not (math.isfinite(c) and c > 0.0):
        raise DomainViolation(f"c must be positive and finite, got {c}")
    if not (math.isfinite(C) and C >= 1.0):
        raise DomainViolation(f"C must be >= 1 and finite, got {C}")
    if not math.isfinite(d) or d < c:
        raise ArgumentOrder(f"d must satisfy d >= c, got d={d}, c={c}")
    return C * (d + 1.0) / (c + 1.0)


def _check_points(points: Sequence[BoundPoint]) -> None:
    if not points:
        raise CoverageGap("no certificate points supplied")
    cs = [p.c for p in points]
    if any(u >= v for u, v in zip(cs, cs[1:])):
        raise DomainViolation("points must be strictly increasing in c")
    for p in points:
        if p.degenerate or p.C_k == DEGENERATE_VALUE:
            raise DegenerateNode(f"degenerate constant at c = {p.c}")


def stitch(points: Sequence[BoundPoint]) -> StitchedCertificate:
    """Lift each node to its interval; no corner bounds.

    The last node has no successor, so it is lifted over one maximal
    spacing (zero for a single point: the certificate then covers the
    single value c_1 only).
    """
    points = tuple(points)
    _check_points(points)
    cs = [p.c for p in points]
    if len(cs) == 1:
        spacing = 0.0
    else:
        spacing = max(v - u for u, v in zip(cs, cs[1:]))
    uppers = cs[1:] + [cs[-1] + spacing]
    lifted = tuple(
        continuity_lift(p.C_k, p.c, d) for p, d in zip(points, uppers)
    )
    return StitchedCertificate(points, lifted, None, None, max(lifted))


def corner_small(c1: float) -> float:
    """Bound over (0, c1] from the Lipschitz estimate: sup c/f1(c) = c1 + 1."""
    if not (math.isfinite(c1) and c1 > 0.0):
        raise DomainViolation(f"c1 must be positive and finite, got {c1}")
    return c1 + 1.0


def corner_large(cn: float) -> float:
    """Bound over [cn, inf) from the shift estimate, valid for cn >= 1/2.

    (1 - 1/(4c))/f1(c) is decreasing on [1/2, inf), so its supremum over
    the tail is the value at cn.
    """
    if not math.isfinite(cn) or cn < 0.5:
        raise DomainViolation(f"cn must be >= 1/2, got {cn}")
    return (1.0 - 1.0 / (4.0 * cn)) * (cn + 1.0) / cn


def global_constant(
    points: Sequence[BoundPoint], c1: float, cn: float
) -> StitchedCertificate:
    """Combine lifted node bounds with the two corner bounds.

    The points must span [c1, cn] exactly; the result bounds the ratio
    for every c > 0.
    """
    points = tuple(points)
    if not points:
        raise CoverageGap("no certificate points supplied")
    if points[0].c != c1 or points[-1].c != cn:
        raise CoverageGap(
            f"points span [{points[0].c}, {points[-1].c}], required [{c1}, {cn}]"
        )
    base = stitch(points)
    small = corner_small(c1)
    large = corner_large(cn)
    return StitchedCertificate(
        base.points,
        base.lifted,
        small,
        large,
        max(small, large, max(base.lifted)),
    )


_SQRT_SPAN = (0.0195, 40.0)


def sqrt_constant(points: Sequence[BoundPoint]) -> float:
    """Constant for the sqrt commutator bound via the integral representation.

    (1/pi) [ 2 sqrt(c_1)
             + sum_k (2 C_k/(c_k+1)) (sqrt(c_{k+1}) - sqrt(c_k))
             + 2/sqrt(c_n) ].
    The grid must span exactly [0.0195, 40].
    """
    points = tuple(points)
    _check_points(points)
    if points[0].c != _SQRT_SPAN[0] or points[-1].c != _SQRT_SPAN[1]:
        raise CoverageGap(
            f"points span [{points[0].c}, {points[-1].c}], required "
            f"[{_SQRT_SPAN[0]}, {_SQRT_SPAN[1]}]"
        )
    total = 2.0 * math.sqrt(points[0].c) + 2.0 / math.sqrt(points[-1].c)
    for here, there in zip(points, points[1:]):
        total += (
            2.0 * here.C_k / (here.c + 1.0)
            * (math.sqrt(there.c) - math.sqrt(here.c))
        )
    return total / math.pi


def _capped_cayley(t: float) -> float:
    """min(csc 1, (t+1)/(1/2 + sqrt(1/4 + t^2))), well defined for t >= 0."""
    return min(csc1(), (t + 1.0) / (0.5 + math.sqrt(0.25 + t * t)))


def gamma_half_integrand(t: float) -> float:
    """Integrand min(csc 1, Cayley bound)/( (1+t) sqrt t ) of the sqrt estimate."""
    if not (math.isfinite(t) and t > 0.0):
        raise DomainViolation(f"t must be positive and finite, got {t}")
    return min(csc1(), scaled_cayley_Cc(t)) / ((1.0 + t) * math.sqrt(t))


def gamma_half_via_Cc() -> float:
    """sqrt-commutator constant from the capped Cayley curve alone.

    Evaluates (1/pi) integral of gamma_half_integrand over (0, inf).
    The substitution t = u^2 removes the 1/sqrt(t) singularity, leaving
    (2/pi) integral of min(csc 1, Cayley(u^2))/(1+u^2) du, which is
    smooth; with the curve replaced by 1 the integral is exactly 1.
    """

    def smooth(u: float) -> float:
        return 2.0 * _capped_cayley(u * u) / (1.0 + u * u)

    value, estimate = quad(smooth, 0.0, math.inf, epsabs=1e-10, epsrel=1e-10, limit=200)
    if estimate / math.pi > 1e-6:
        raise RuntimeError(
            f"quadrature error estimate {estimate / math.pi:.3e} exceeds 1e-6"
        )
    return value / math.pi
