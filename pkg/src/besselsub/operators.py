"""Diagonal coefficient operators on normalized analytic functions.

All operators act on series of the shape ``f(z) = z + a_2 z^2 + ...``
(vanishing constant term, unit linear term) and are implemented as exact
coefficient maps, never by numerical convolution, so that the algebraic
identities below hold to rounding error.

* ``apply_B``      : Hadamard product with ``z * u`` for a parameter triple,
                     i.e. ``a_{n+1} -> a_{n+1} (-c/4)^n / ((kappa)_n n!)``.
* ``blend_phi``    : convex combination ``(1-lam) B_{k+1}(g)/z + lam B_{k+2}(g)/z``.
* ``libera_transform`` : averaging operator ``a_{n+1} -> a_{n+1} (mu+1)/(mu+n+1)``.

``recurrence_residual`` and ``libera_recurrence_residual`` measure the two
operator identities

    z (B_{k+2} f)' = (k+1) B_{k+1} f - k B_{k+2} f,
    z (B_k F_mu f)' = (mu+1) B_k f - mu B_k F_mu f,

as maximum coefficient discrepancies; both vanish up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .bessel import BesselParameters, u_coefficient_rule
from .errors import NumericGuardError
from .series import PowerSeries

__all__ = [
    "BlendSpec",
    "LiberaSpec",
    "apply_B",
    "recurrence_residual",
    "blend_phi",
    "libera_transform",
    "libera_quadrature_oracle",
    "libera_recurrence_residual",
]

_NORM_TOL = 1e-13


@dataclass(frozen=True)
class BlendSpec:
    """Blend weight lam in [0, 1) and a parameter triple with kappa > -1."""

    lam: float
    params: BesselParameters

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", float(self.lam))
        if not 0.0 <= self.lam < 1.0:
            raise ValueError("lam must lie in [0, 1)")
        if not self.params.kappa > -1.0:
            raise ValueError("kappa must exceed -1")


@dataclass(frozen=True)
class LiberaSpec:
    """Averaging order mu > -1."""

    mu: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", float(self.mu))
        if not self.mu > -1.0:
            raise ValueError("mu must exceed -1")


def _require_normalized(f: PowerSeries, name: str = "f") -> None:
    if f.order < 2:
        raise ValueError(f"{name} must have order >= 2")
    if abs(f.coeffs[0]) > _NORM_TOL or abs(f.coeffs[1] - 1.0) > _NORM_TOL:
        raise ValueError(f"{name} must be normalized: f(0) = 0, f'(0) = 1")


def apply_B(params: BesselParameters, f: PowerSeries) -> PowerSeries:
    """Hadamard product with z*u: coeffs[n+1] scaled by the u coefficient c_n."""
    _require_normalized(f)
    rule = u_coefficient_rule(params)
    out = np.empty(f.order, dtype=np.complex128)
    out[0] = 0.0
    for k in range(1, f.order):
        out[k] = f.coeffs[k] * rule(k - 1)
    return PowerSeries(out)


def recurrence_residual(params: BesselParameters, f: PowerSeries) -> float:
    """Max coefficient gap in z (B_{k+2} f)' = (k+1) B_{k+1} f - k B_{k+2} f."""
    _require_normalized(f)
    k = params.kappa
    b1 = apply_B(params.shifted(1), f)
    b2 = apply_B(params.shifted(2), f)
    lhs = b2.z_derivative().coeffs
    rhs = (k + 1.0) * b1.coeffs - k * b2.coeffs
    return float(np.max(np.abs(lhs - rhs)))


def blend_phi(spec: BlendSpec, g: PowerSeries) -> PowerSeries:
    """Blend (1-lam) B_{k+1}(g)/z + lam B_{k+2}(g)/z; the result fixes 1 at 0."""
    _require_normalized(g, "g")
    b1 = apply_B(spec.params.shifted(1), g).shifted_down()
    b2 = apply_B(spec.params.shifted(2), g).shifted_down()
    out = (1.0 - spec.lam) * b1.coeffs + spec.lam * b2.coeffs
    # Both shifted series start at exactly 1, so the constant term is
    # (1-lam) + lam; write the exact value rather than the rounded sum.
    out[0] = 1.0
    return PowerSeries(out)


def libera_transform(spec: LiberaSpec, f: PowerSeries) -> PowerSeries:
    """Coefficient contraction a_{n+1} -> a_{n+1} (mu+1)/(mu+n+1)."""
    _require_normalized(f)
    n = np.arange(f.order - 1)
    out = np.empty(f.order, dtype=np.complex128)
    out[0] = 0.0
    out[1:] = f.coeffs[1:] * ((spec.mu + 1.0) / (spec.mu + 1.0 + n))
    return PowerSeries(out)


def libera_quadrature_oracle(spec: LiberaSpec, f: PowerSeries,
                             z: complex) -> complex:
    """Independent integral-definition cross-check of :func:`libera_transform`.

    Integrates (mu+1) z^{-mu} int_0^z t^{mu-1} f(t) dt along the straight
    segment [0, z].  Substituting t = s z cancels z^mu exactly, leaving
    (mu+1) int_0^1 s^{mu-1} f(s z) ds with an integrable endpoint for
    mu > -1, which adaptive quadrature handles directly.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise ValueError("|z| must be < 1")
    mu = spec.mu

    def integrand(s: float) -> complex:
        return s ** (mu - 1.0) * f.evaluate(s * z)

    re = quad(lambda s: integrand(s).real, 0.0, 1.0,
              epsabs=1e-13, epsrel=1e-12, limit=200, full_output=1)
    im = quad(lambda s: integrand(s).imag, 0.0, 1.0,
              epsabs=1e-13, epsrel=1e-12, limit=200, full_output=1)
    err = max(re[1], im[1])
    if err > 1e-9:
        raise NumericGuardError(
            f"quadrature did not converge (abserr {err:.3g})"
        )
    return (mu + 1.0) * (re[0] + 1j * im[0])


def libera_recurrence_residual(spec: LiberaSpec, params: BesselParameters,
                               f: PowerSeries) -> float:
    """Max coefficient gap in z (B_k F_mu f)' = (mu+1) B_k f - mu B_k F_mu f."""
    _require_normalized(f)
    mu = spec.mu
    bf = apply_B(params, f)
    bff = apply_B(params, libera_transform(spec, f))
    lhs = bff.z_derivative().coeffs
    rhs = (mu + 1.0) * bf.coeffs - mu * bff.coeffs
    return float(np.max(np.abs(lhs - rhs)))
