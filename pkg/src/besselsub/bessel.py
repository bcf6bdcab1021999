"""Bessel-type series, closed-form trigonometric oracles, and ODE residuals.

Two families live here.  ``w`` is the classical series solution of

    z^2 w'' + b z w' + (c z^2 - p^2 + (1 - b) p) w = 0,

carrying a ``z**p`` prefactor and therefore a branch cut on the negative
real axis.  ``u`` is its normalized entire transform with ``u(0) = 1``,
whose coefficients satisfy the stable ratio recurrence

    c_{n+1} = c_n * (-c/4) / ((kappa + n) * (n + 1)),    kappa = p + (b+1)/2,

and which solves ``4 z^2 u'' + 2 (2p + b + 1) z u' + c z u = 0``.  The three
special parameter triples with elementary trigonometric values are exposed
through :class:`ClosedFormTag`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import NumericGuardError
from .series import EvaluationGrid, PowerSeries

__all__ = [
    "BesselParameters",
    "ClosedFormTag",
    "pochhammer",
    "u_series",
    "u_coefficient_rule",
    "w_value",
    "closed_form_eval",
    "ode_lhs_u",
    "ode_residual_u",
    "ode_lhs_w",
    "ode_residual_w",
]

#: Absolute tolerance for rejecting kappa at a non-positive integer.
_POLE_TOL = 1e-9

#: Grid points closer than this to the negative real axis are rejected when
#: finite differences are taken across the slit plane.
_BRANCH_GUARD = 1e-4

#: Relative step for the five-point stencils in :func:`ode_residual_w`.
#: Chosen near eps**(1/6) so the second-derivative rounding error (~eps/h^2)
#: and truncation error (~h^4) are both far below the 1e-5 residual budget.
_FD_STEP = 1e-3


@dataclass(frozen=True)
class BesselParameters:
    """Parameter triple (p, b, c) with derived index kappa = p + (b+1)/2."""

    p: float
    b: float
    c: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if not (math.isfinite(self.p) and math.isfinite(self.b)
                and math.isfinite(abs(self.c))):
            raise ValueError("parameters must be finite")
        k = self.kappa
        nearest = round(k)
        if nearest <= 0 and abs(k - nearest) < _POLE_TOL:
            raise ValueError(
                f"kappa = {k} hits a non-positive integer; the coefficient "
                "denominators vanish there"
            )

    @property
    def kappa(self) -> float:
        return self.p + (self.b + 1.0) / 2.0

    def shifted(self, k: int) -> "BesselParameters":
        """Same (b, c) with p, and hence kappa, shifted by the integer k."""
        return BesselParameters(self.p + k, self.b, self.c)


class ClosedFormTag(Enum):
    """The three parameter triples with elementary closed forms."""

    COS_SQRT = "cos_sqrt"
    SINC_SQRT = "sinc_sqrt"
    THREE_HALVES_TRIG = "three_halves_trig"

    @property
    def parameters(self) -> BesselParameters:
        p = {"cos_sqrt": -0.5, "sinc_sqrt": 0.5, "three_halves_trig": 1.5}
        return BesselParameters(p[self.value], 1.0, 1.0)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial a (a+1) ... (a+n-1), with the empty product equal to 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def u_coefficient_rule(params: BesselParameters) -> Callable[[int], complex]:
    """Coefficient rule n -> c_n of the normalized series, memoized.

    Coefficients come from the ratio recurrence rather than Gamma-function
    quotients, which avoids overflow and cancellation for large n.
    """
    cache = [1.0 + 0.0j]
    kappa, c = params.kappa, params.c

    def rule(n: int) -> complex:
        if n < 0:
            raise ValueError("coefficient index must be non-negative")
        while len(cache) <= n:
            m = len(cache) - 1
            cache.append(cache[m] * (-c / 4.0) / ((kappa + m) * (m + 1)))
        return cache[n]

    return rule


def u_series(params: BesselParameters, n_terms: int = 64) -> PowerSeries:
    """Truncation of the normalized entire series, coeffs[0] = 1."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    rule = u_coefficient_rule(params)
    return PowerSeries(np.array([rule(n) for n in range(n_terms)]))


def w_value(params: BesselParameters, z: complex, n_terms: int = 64) -> complex:
    """Evaluate w = (z/2)**p / Gamma(kappa) * u(z^2) on the principal branch.

    The prefactor puts a cut on (-inf, 0]; inputs there are rejected.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise ValueError("z must avoid the branch cut (-inf, 0]")
    u = u_series(params, n_terms).evaluate(z * z)
    return z ** params.p / (2.0 ** params.p * math.gamma(params.kappa)) * u


# Leading exact coefficients of the three-halves form, used below the
# cancellation threshold where the closed formula subtracts 1/z^2 terms.
_THREE_HALVES_TAYLOR = (
    1.0, -1.0 / 10.0, 1.0 / 280.0, -1.0 / 15120.0,
    1.0 / 1330560.0, -1.0 / 172972800.0,
)


def closed_form_eval(tag: ClosedFormTag, z):
    """Elementary closed forms: cos(sqrt z), sin(sqrt z)/sqrt z, and
    3 (sin(sqrt z)/(z sqrt z) - cos(sqrt z)/z).

    Each formula is even in sqrt(z), so the principal branch is immaterial.
    Removable singularities at z = 0 take their limit value 1; the
    three-halves form switches to its Taylor polynomial for small |z| where
    the subtraction would cancel catastrophically.
    """
    scalar = np.isscalar(z) or np.ndim(z) == 0
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if not np.all(np.isfinite(zz)):
        raise ValueError("z must be finite")
    s = np.sqrt(zz)
    if tag is ClosedFormTag.COS_SQRT:
        out = np.cos(s)
    elif tag is ClosedFormTag.SINC_SQRT:
        out = np.empty_like(zz)
        nz = zz != 0
        out[nz] = np.sin(s[nz]) / s[nz]
        out[~nz] = 1.0
    elif tag is ClosedFormTag.THREE_HALVES_TRIG:
        out = np.empty_like(zz)
        big = np.abs(zz) >= 1e-1
        zb, sb = zz[big], s[big]
        out[big] = 3.0 * (np.sin(sb) / (zb * sb) - np.cos(sb) / zb)
        small = zz[~big]
        acc = np.zeros_like(small)
        for c in _THREE_HALVES_TAYLOR[::-1]:
            acc = acc * small + c
        out[~big] = acc
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown tag {tag!r}")
    return complex(out[0]) if scalar else out.reshape(np.shape(z))


def ode_lhs_u(params: BesselParameters, s: PowerSeries, z):
    """Left side 4 z^2 u'' + 2 (2p + b + 1) z u' + c z u at z, derivatives exact."""
    d1 = s.differentiate()
    d2 = d1.differentiate()
    zz = np.asarray(z, dtype=np.complex128)
    coeff = 2.0 * (2.0 * params.p + params.b + 1.0)
    return (4.0 * zz * zz * d2.evaluate(zz)
            + coeff * zz * d1.evaluate(zz)
            + params.c * zz * s.evaluate(zz))


def ode_residual_u(params: BesselParameters, s: PowerSeries,
                   grid: EvaluationGrid) -> float:
    """Supremum of the normalized-equation residual over the grid."""
    return float(np.max(np.abs(ode_lhs_u(params, s, grid.points()))))


def _w_values(params: BesselParameters, zs: np.ndarray, n_terms: int) -> np.ndarray:
    u = u_series(params, n_terms).evaluate(zs * zs)
    return zs ** params.p / (2.0 ** params.p * math.gamma(params.kappa)) * u


def ode_lhs_w(params: BesselParameters, z, n_terms: int = 64,
              w_func=None) -> np.ndarray:
    """Left side of the original equation at z, derivatives by finite differences.

    Uses five-point stencils with a real step ``1e-3 * |z|``.  Every input
    must stay clear of the branch cut; the stencil itself never crosses it
    because a real step preserves the imaginary part.  ``w_func`` substitutes
    an alternative candidate solution for the built-in series evaluation.
    """
    zs = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    near_cut = (zs.real < 0) & (np.abs(zs.imag) < _BRANCH_GUARD)
    if np.any(near_cut):
        bad = zs[near_cut][0]
        raise NumericGuardError(
            f"point {bad} is within {_BRANCH_GUARD} of the branch cut"
        )
    if w_func is None:
        w_func = lambda pts: _w_values(params, pts, n_terms)
    h = _FD_STEP * np.abs(zs)
    fm2 = w_func(zs - 2 * h)
    fm1 = w_func(zs - h)
    f0 = w_func(zs)
    fp1 = w_func(zs + h)
    fp2 = w_func(zs + 2 * h)
    d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
    d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h)
    p, b, c = params.p, params.b, params.c
    return zs * zs * d2 + b * zs * d1 + (c * zs * zs - p * p + (1 - b) * p) * f0


def ode_residual_w(params: BesselParameters, grid: EvaluationGrid,
                   n_terms: int = 64) -> float:
    """Supremum of the original-equation residual over the grid."""
    return float(np.max(np.abs(ode_lhs_w(params, grid.points().ravel(), n_terms))))
