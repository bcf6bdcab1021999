"""Truncated complex power series about the origin.

A :class:`PowerSeries` stores the first ``order`` Taylor coefficients of an
analytic function, ``coeffs[n]`` multiplying ``z**n``.  All arithmetic is
exact coefficient arithmetic in double precision; binary operations use the
minimum of the two orders, which is recorded in the result.  Values are
immutable after construction and every operation is pure, so instances can
be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

__all__ = [
    "PowerSeries",
    "EvaluationGrid",
    "tail_bound",
    "DEFAULT_GRID",
    "RHO_LADDER",
]

#: Radius ladder used to approach the boundary of the unit disk.
RHO_LADDER = (0.9, 0.99, 0.999, 0.9999)


def _as_finite_complex(z, name: str = "z"):
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite (no NaN/Inf)")
    return arr


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Taylor series ``sum_n coeffs[n] z**n`` with ``order`` terms."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("coeffs must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite (no NaN/Inf)")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[complex]) -> "PowerSeries":
        return cls(np.asarray(list(coeffs), dtype=np.complex128))

    @classmethod
    def monomial(cls, degree: int, order: int) -> "PowerSeries":
        """The series of ``z**degree`` truncated to ``order`` terms."""
        if order < degree + 1:
            raise ValueError("order too small to hold the requested monomial")
        c = np.zeros(order, dtype=np.complex128)
        c[degree] = 1.0
        return cls(c)

    @property
    def order(self) -> int:
        return int(self.coeffs.size)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[:n] + other.coeffs[:n])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[:n] - other.coeffs[:n])

    def scaled(self, alpha: complex) -> "PowerSeries":
        return PowerSeries(self.coeffs * complex(alpha))

    def hadamard(self, other: "PowerSeries") -> "PowerSeries":
        """Termwise coefficient product, down to the smaller order.

        Spelled out in real arithmetic so each partial product is rounded
        separately; vectorized complex multiplication may contract one
        product into an FMA, which would break exact commutativity.
        """
        n = min(self.order, other.order)
        ar, ai = self.coeffs[:n].real, self.coeffs[:n].imag
        br, bi = other.coeffs[:n].real, other.coeffs[:n].imag
        out = np.empty(n, dtype=np.complex128)
        out.real = ar * br - ai * bi
        out.imag = ar * bi + ai * br
        return PowerSeries(out)

    def differentiate(self) -> "PowerSeries":
        """Exact term-by-term derivative; the order decreases by one."""
        if self.order < 2:
            raise ValueError("cannot differentiate a series of order < 2")
        n = np.arange(1, self.order)
        return PowerSeries(n * self.coeffs[1:])

    def z_derivative(self) -> "PowerSeries":
        """The operator ``z d/dz`` as a coefficient map; order is preserved."""
        return PowerSeries(np.arange(self.order) * self.coeffs)

    def shifted_down(self) -> "PowerSeries":
        """Divide by z as an index shift; requires a vanishing constant term."""
        if self.order < 2:
            raise ValueError("cannot shift a series of order < 2")
        if self.coeffs[0] != 0:
            raise ValueError("division by z requires coeffs[0] == 0")
        return PowerSeries(self.coeffs[1:])

    def evaluate(self, z):
        """Horner evaluation at a complex point or ndarray of points."""
        zz = _as_finite_complex(z)
        acc = np.zeros_like(zz)
        for c in self.coeffs[::-1]:
            acc = acc * zz + c
        if np.isscalar(z) or np.ndim(z) == 0:
            return complex(acc)
        return acc


def tail_bound(coefficient_rule: Callable[[int], complex], n_omitted: int,
               radius: float) -> float:
    """Upper bound for the omitted tail ``|sum_{n>=N} c_n z^n|`` on ``|z| <= radius``.

    The bound is the first omitted term majorized by a geometric series with
    ratio ``|c_{N+1}/c_N| * radius``.  It is valid whenever the coefficient
    ratios are non-increasing from ``N`` on, which holds for every
    factorial-decay series used here.

    Raises ``ValueError`` when the ratio is >= 1, i.e. ``N`` is too small to
    certify anything at this radius.
    """
    if not 0.0 < radius <= 1.0:
        raise ValueError("radius must lie in (0, 1]")
    if n_omitted < 1:
        raise ValueError("n_omitted must be >= 1")
    c0 = complex(coefficient_rule(n_omitted))
    first = abs(c0) * radius ** n_omitted
    if first == 0.0:
        return 0.0
    c1 = complex(coefficient_rule(n_omitted + 1))
    ratio = abs(c1) / abs(c0) * radius
    if ratio >= 1.0:
        raise ValueError(
            f"coefficient ratio {ratio:.3g} >= 1 at N={n_omitted}; "
            "N is too small to certify this radius"
        )
    return first / (1.0 - ratio)


@dataclass(frozen=True)
class EvaluationGrid:
    """Concentric sampling of the disk: points ``rho * exp(2*pi*i*k/M)``.

    Radii are strictly increasing and below 1.  ``points()`` returns an
    angle-major array so that flattened argmin/argmax reductions break ties
    by smallest angle index first, then smallest radius, independent of how
    the sweep is parallelized.
    """

    radii: tuple
    angles_per_radius: int

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ValueError("at least one radius is required")
        if any(not 0.0 < r < 1.0 for r in radii):
            raise ValueError("radii must lie strictly inside (0, 1)")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if self.angles_per_radius < 1:
            raise ValueError("angles_per_radius must be positive")
        object.__setattr__(self, "radii", radii)

    def angles(self) -> np.ndarray:
        m = self.angles_per_radius
        return 2.0 * np.pi * np.arange(m) / m

    def points(self) -> np.ndarray:
        """Complex samples, shape ``(angles_per_radius, len(radii))``."""
        unit = np.exp(1j * self.angles())
        return unit[:, None] * np.asarray(self.radii)[None, :]


DEFAULT_GRID = EvaluationGrid(
    radii=(0.2, 0.4, 0.6, 0.8, 0.9, 0.99, 0.999, 0.9999),
    angles_per_radius=512,
)
