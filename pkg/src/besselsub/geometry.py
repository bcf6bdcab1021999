"""Numerical subordination oracle and scalar side conditions.

Subordination of f to a univalent F on the disk is equivalent to
``f(0) = F(0)`` together with inclusion of images.  The oracle tests the
inclusion on circles: it samples the image of ``|z| = rho_F`` under F as a
closed polyline, asserts numerically that the polyline is simple (a guard,
not a univalence proof), and requires every sample of f on ``|z| = rho_f``
to have winding number one with respect to that polyline.  The reported
margin is the signed distance from the tested samples to the target
boundary, negative when violated; verdicts whose margin falls within the
point-on-curve tolerance are flagged indeterminate rather than forced.

No finite test on closed sub-disks is conclusive for an open-disk
statement; callers approach the boundary along a radius ladder and compare
the last rungs for stability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from shapely.geometry import LinearRing

from .errors import NumericGuardError
from .series import RHO_LADDER, EvaluationGrid, PowerSeries

__all__ = [
    "TOLERANCE",
    "BoundaryCurve",
    "SubordinationVerdict",
    "ConditionReport",
    "gamma_from_pair",
    "gamma_lambda_kappa",
    "gamma_mu",
    "boundary_curve",
    "winding_number",
    "check_subordination",
    "check_disk_subordination",
    "convexity_functional",
    "check_convexity_condition",
    "loewner_chain_check",
    "admissibility_check",
    "key_inequality_check",
    "golden_section_minimize",
    "grid_infimum",
    "grid_supremum",
]

#: Point-on-curve ambiguity tolerance; margins within it are indeterminate.
TOLERANCE = 1e-9

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class BoundaryCurve:
    """Image samples of the circle ``|z| = rho`` under an analytic map.

    ``points[k]`` is the image of ``rho * exp(2 pi i k / M)``; the polyline
    closes from the last point back to the first.
    """

    rho: float
    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=np.complex128)
        if pts.ndim != 1 or pts.size < 256:
            raise ValueError("a boundary curve needs at least 256 samples")
        if not 0.0 < self.rho < 1.0:
            raise ValueError("rho must lie in (0, 1)")
        if not np.all(np.isfinite(pts)):
            raise ValueError("curve points must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def is_simple(self) -> bool:
        """Numeric guard that the closed polyline has no self-intersection."""
        try:
            ring = LinearRing(np.column_stack([self.points.real,
                                               self.points.imag]))
        except Exception:
            return False
        return bool(ring.is_simple)


@dataclass(frozen=True)
class SubordinationVerdict:
    holds: bool
    margin: float
    witness: complex
    indeterminate: bool = False

    def __post_init__(self) -> None:
        if self.holds != (self.margin > TOLERANCE):
            raise ValueError("holds must equal (margin > tolerance)")
        if self.indeterminate != (abs(self.margin) <= TOLERANCE):
            raise ValueError("indeterminate marks margins within tolerance")

    @classmethod
    def from_margin(cls, margin: float, witness: complex) -> "SubordinationVerdict":
        margin = float(margin)
        return cls(holds=margin > TOLERANCE,
                   margin=margin,
                   witness=complex(witness),
                   indeterminate=abs(margin) <= TOLERANCE)


@dataclass(frozen=True)
class ConditionReport:
    """Grid extremum of a tested functional against a threshold."""

    functional_name: str
    infimum: float
    threshold: float
    passed: bool
    argmin: complex

    def __post_init__(self) -> None:
        if self.passed != (self.infimum > self.threshold):
            raise ValueError("passed must equal (infimum > threshold)")


# ---------------------------------------------------------------------------
# gamma constants
# ---------------------------------------------------------------------------

def gamma_from_pair(x: float, y: float) -> float:
    """Symmetric kernel (x^2 + y^2 - sqrt(x^4 + y^4)) / (4 x y) for x, y > 0.

    Evaluated as ``x y / (2 (x^2 + y^2 + sqrt(x^4 + y^4)))``, the
    conjugate-multiplied form, which is free of cancellation for all
    magnitudes of x/y.
    """
    if not (x > 0.0 and y > 0.0):
        raise ValueError("both arguments must be positive")
    return x * y / (2.0 * (x * x + y * y + math.sqrt(x ** 4 + y ** 4)))


def gamma_lambda_kappa(lam: float, kappa: float) -> float:
    """Convexity slack constant for blend weight lam and index kappa."""
    if not 0.0 <= lam < 1.0:
        raise ValueError("lam must lie in [0, 1)")
    if not kappa > -1.0:
        raise ValueError("kappa must exceed -1")
    return gamma_from_pair(1.0 - lam, kappa + 1.0)


def gamma_mu(mu: float) -> float:
    """Convexity slack constant for the averaging operator of order mu."""
    if not mu > -1.0:
        raise ValueError("mu must exceed -1")
    return gamma_from_pair(1.0, mu + 1.0)


# ---------------------------------------------------------------------------
# winding numbers and distances
# ---------------------------------------------------------------------------

def boundary_curve(f: PowerSeries, rho: float, m: int = 512) -> BoundaryCurve:
    """Sample the image of ``|z| = rho`` under f with m points."""
    z = rho * np.exp(2j * np.pi * np.arange(m) / m)
    return BoundaryCurve(rho=rho, points=f.evaluate(z))


def _segment_data(curve: BoundaryCurve):
    a = curve.points
    b = np.roll(a, -1)
    return a, b


def _distances_to_curve(samples: np.ndarray, curve: BoundaryCurve,
                        chunk: int = 512) -> np.ndarray:
    """Distance from each sample to the closed polyline, vectorized in chunks."""
    a, b = _segment_data(curve)
    d = b - a
    # Degenerate (zero-length) segments project onto their start point.
    dd = np.maximum((d * d.conjugate()).real, 1e-300)
    out = np.empty(samples.size, dtype=np.float64)
    for lo in range(0, samples.size, chunk):
        w = samples[lo:lo + chunk, None]
        t = ((w - a[None, :]) * d[None, :].conjugate()).real / dd[None, :]
        np.clip(t, 0.0, 1.0, out=t)
        proj = a[None, :] + t * d[None, :]
        out[lo:lo + chunk] = np.abs(w - proj).min(axis=1)
    return out


def _winding_numbers(samples: np.ndarray, curve: BoundaryCurve,
                     chunk: int = 512) -> np.ndarray:
    """Winding number of the curve around each sample (angle-increment sum)."""
    a, b = _segment_data(curve)
    out = np.empty(samples.size, dtype=np.int64)
    for lo in range(0, samples.size, chunk):
        w = samples[lo:lo + chunk, None]
        inc = np.angle((b[None, :] - w) / (a[None, :] - w))
        out[lo:lo + chunk] = np.rint(inc.sum(axis=1) / (2.0 * np.pi)).astype(np.int64)
    return out


def winding_number(curve: BoundaryCurve, w: complex) -> int:
    """Signed angle-increment winding number of the curve about w.

    Raises :class:`NumericGuardError` when w sits within tolerance of the
    curve, where the count is ill-defined.
    """
    w = complex(w)
    samples = np.array([w])
    if _distances_to_curve(samples, curve)[0] < TOLERANCE:
        raise NumericGuardError("point lies on the curve within tolerance")
    return int(_winding_numbers(samples, curve)[0])


# ---------------------------------------------------------------------------
# subordination oracles
# ---------------------------------------------------------------------------

def check_subordination(f: PowerSeries, F: PowerSeries, rho_f: float,
                        rho_F: float, m: int = 512) -> SubordinationVerdict:
    """Test circle-image inclusion of f inside the target F.

    The caller asserts that F is univalent on the disk; the oracle only
    guards that the sampled target boundary is a simple polyline and raises
    :class:`NumericGuardError` when it is not.
    """
    if not 0.0 < rho_f < rho_F < 1.0:
        raise ValueError("need 0 < rho_f < rho_F < 1")
    curve = boundary_curve(F, rho_F, m)
    if not curve.is_simple():
        raise NumericGuardError(
            "target boundary curve self-intersects; the univalence "
            "assertion fails numerically"
        )
    f0 = complex(f.coeffs[0])
    F0 = complex(F.coeffs[0])
    if abs(f0 - F0) >= 1e-12:
        # Base-point mismatch disqualifies outright; report it as the margin.
        return SubordinationVerdict.from_margin(-abs(f0 - F0), f0)
    samples = f.evaluate(rho_f * np.exp(2j * np.pi * np.arange(m) / m))
    dist = _distances_to_curve(samples, curve)
    on_curve = dist < TOLERANCE
    inside = np.zeros(samples.size, dtype=bool)
    off = ~on_curve
    if np.any(off):
        inside[off] = _winding_numbers(samples[off], curve) == 1
    signed = np.where(inside, dist, -dist)
    signed[on_curve] = 0.0
    idx = int(np.argmin(signed))
    return SubordinationVerdict.from_margin(signed[idx], samples[idx])


def check_disk_subordination(g: PowerSeries, radius: float,
                             radii: Sequence[float] = RHO_LADDER,
                             angles: int = 512) -> SubordinationVerdict:
    """Subordination of g to the affine target ``1 + radius * z``.

    Equivalent to ``sup |g - 1| < radius`` over the disk; the supremum is
    taken over the radius ladder and refined once along the angular
    direction.  The witness is the maximizing point.
    """
    if abs(complex(g.coeffs[0]) - 1.0) > 1e-12:
        raise ValueError("g must satisfy g(0) = 1")
    if not radius > 0.0:
        raise ValueError("radius must be positive")
    grid = EvaluationGrid(radii=tuple(radii), angles_per_radius=angles)
    sup, argmax = _grid_extremum(
        lambda z: np.abs(g.evaluate(z) - 1.0), grid, mode="max")
    return SubordinationVerdict.from_margin(radius - sup, argmax)


# ---------------------------------------------------------------------------
# grid extremization with one golden-section refinement pass
# ---------------------------------------------------------------------------

def golden_section_minimize(fun: Callable[[float], float], lo: float,
                            hi: float, iters: int = 60):
    """Fixed-iteration golden-section minimum of a scalar function."""
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = fun(x1), fun(x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = fun(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = fun(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def _grid_extremum(values_at: Callable[[np.ndarray], np.ndarray],
                   grid: EvaluationGrid, mode: str):
    """Extremize a real functional over the grid, then refine the angle.

    The grid array is angle-major, so the flat argmin/argmax tie-breaks by
    smallest angle index first, then smallest radius, making the reported
    extremizer reproducible regardless of evaluation order.
    """
    pts = grid.points()
    vals = np.asarray(values_at(pts), dtype=np.float64)
    sign = 1.0 if mode == "min" else -1.0
    flat = int(np.argmin(sign * vals.ravel()))
    k, i = divmod(flat, len(grid.radii))
    best_val = float(vals[k, i])
    rho = grid.radii[i]
    theta = 2.0 * np.pi * k / grid.angles_per_radius
    dth = 2.0 * np.pi / grid.angles_per_radius

    def along_angle(t: float) -> float:
        z = np.asarray(rho * np.exp(1j * t))
        return sign * float(values_at(z))

    t_ref, v_ref = golden_section_minimize(along_angle, theta - dth, theta + dth)
    v_ref *= sign
    if (v_ref < best_val) if mode == "min" else (v_ref > best_val):
        best_val = v_ref
        argbest = rho * np.exp(1j * t_ref)
    else:
        argbest = rho * np.exp(1j * theta)
    return best_val, complex(argbest)


def grid_infimum(values_at: Callable[[np.ndarray], np.ndarray],
                 grid: EvaluationGrid):
    """Grid infimum of a real functional with one angular refinement pass."""
    return _grid_extremum(values_at, grid, mode="min")


def grid_supremum(values_at: Callable[[np.ndarray], np.ndarray],
                  grid: EvaluationGrid):
    """Grid supremum of a real functional with one angular refinement pass."""
    return _grid_extremum(values_at, grid, mode="max")


# ---------------------------------------------------------------------------
# scalar side conditions
# ---------------------------------------------------------------------------

def _curvature_values(phi: PowerSeries):
    """Series derivatives entering Re(1 + z phi''/phi')."""
    d1 = phi.differentiate()
    if d1.order >= 2:
        d2 = d1.differentiate()
    else:
        d2 = PowerSeries(np.zeros(1, dtype=np.complex128))
    return d1, d2


def convexity_functional(phi: PowerSeries, z) -> np.ndarray:
    """Re(1 + z phi''/phi') with exact series derivatives.

    Raises :class:`NumericGuardError` where phi' vanishes, since the
    quotient is meaningless there.
    """
    d1, d2 = _curvature_values(phi)
    zz = np.asarray(z, dtype=np.complex128)
    den = d1.evaluate(zz)
    if np.min(np.abs(den)) <= 1e-12:
        raise NumericGuardError(
            "phi' vanishes on the grid; the condition is meaningless there"
        )
    return (1.0 + zz * d2.evaluate(zz) / den).real


def check_convexity_condition(phi: PowerSeries, threshold_gamma: float,
                              grid: EvaluationGrid) -> ConditionReport:
    """Infimum of Re(1 + z phi''/phi') against the slack -threshold_gamma."""
    if abs(complex(phi.coeffs[0]) - 1.0) > 1e-12:
        raise ValueError("phi must satisfy phi(0) = 1")

    infimum, argmin = _grid_extremum(lambda z: convexity_functional(phi, z),
                                     grid, mode="min")
    threshold = -float(threshold_gamma)
    return ConditionReport(
        functional_name="convexity",
        infimum=infimum,
        threshold=threshold,
        passed=infimum > threshold,
        argmin=argmin,
    )


def loewner_chain_check(phi: PowerSeries, lam: float, kappa: float,
                        t_samples: Sequence[float],
                        grid: EvaluationGrid) -> ConditionReport:
    """Positivity of Re[(kappa+1)/(1-lam) + (1+t)(1 + z phi''/phi')].

    This is the direction-of-growth functional of the chain
    ``phi(z) + (1+t) (1-lam)/(kappa+1) z phi'(z)``; positivity for all t in
    the sample set and all grid z certifies the chain ordering numerically.
    """
    if not 0.0 <= lam < 1.0:
        raise ValueError("lam must lie in [0, 1)")
    if not kappa > -1.0:
        raise ValueError("kappa must exceed -1")
    ts = [float(t) for t in t_samples]
    if not ts or any(t < 0.0 for t in ts):
        raise ValueError("t_samples must be non-empty and non-negative")
    if phi.order < 2 or phi.coeffs[1] == 0:
        raise ValueError("phi'(0) must be nonzero")
    base = (kappa + 1.0) / (1.0 - lam)
    conv_min, argmin = _grid_extremum(
        lambda z: convexity_functional(phi, z), grid, mode="min")
    # (1+t) > 0, so for each t the infimum over z reuses the curvature infimum.
    infimum = min(base + (1.0 + t) * conv_min for t in ts)
    return ConditionReport(
        functional_name="loewner_chain_direction",
        infimum=float(infimum),
        threshold=0.0,
        passed=infimum > 0.0,
        argmin=argmin,
    )


def admissibility_check(lam: float, kappa: float,
                        s_samples: Sequence[float]) -> ConditionReport:
    """Boundary positivity margin of the admissibility expression.

    For xi(u, v) = u + v / (u + A) + gamma with A = (kappa+1)/(1-lam), the
    requirement is Re xi(i s, t) <= 0 for every real s and every
    t <= -(1+s^2)/2.  The coefficient of t in Re xi(i s, t), namely
    A / (s^2 + A^2), is positive, so the supremum over admissible t is
    attained at t = -(1+s^2)/2 and only that extreme is evaluated.  The
    reported functional is the margin -Re xi, so passing means the margin
    stays positive over the sweep.
    """
    if not 0.0 <= lam < 1.0:
        raise ValueError("lam must lie in [0, 1)")
    if not kappa > -1.0:
        raise ValueError("kappa must exceed -1")
    s = np.asarray(list(s_samples), dtype=np.float64)
    if s.size == 0:
        raise ValueError("s_samples must be non-empty")
    a = (kappa + 1.0) / (1.0 - lam)
    gamma = gamma_lambda_kappa(lam, kappa)
    t = -(1.0 + s * s) / 2.0
    re_xi = t * a / (s * s + a * a) + gamma
    idx = int(np.argmax(re_xi))
    margin = -float(re_xi[idx])
    return ConditionReport(
        functional_name="admissibility_margin",
        infimum=margin,
        threshold=0.0,
        passed=margin > 0.0,
        argmin=complex(0.0, s[idx]),
    )


def key_inequality_check(lam: float, kappa: float) -> bool:
    """The scalar inequality (1-lam)^4 - sqrt((1-lam)^4 + (kappa+1)^4) < 3 (kappa+1)^2."""
    if not 0.0 <= lam < 1.0:
        raise ValueError("lam must lie in [0, 1)")
    if not kappa > -1.0:
        raise ValueError("kappa must exceed -1")
    x = 1.0 - lam
    y = kappa + 1.0
    lhs = x ** 4 - math.sqrt(x ** 4 + y ** 4)
    return bool(lhs < 3.0 * y * y)
