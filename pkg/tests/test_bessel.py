"""Tests for the Bessel-type series, closed forms, and ODE residuals."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselsub.bessel import (
    BesselParameters,
    ClosedFormTag,
    closed_form_eval,
    ode_lhs_u,
    ode_lhs_w,
    ode_residual_u,
    ode_residual_w,
    pochhammer,
    u_series,
    w_value,
)
from besselsub.errors import NumericGuardError
from besselsub.series import EvaluationGrid, PowerSeries

SIN1 = 0.8414709848078965        # sin(1)
COSH1 = 1.5430806348152437       # cosh(1)
THREE_OVER_E = 1.1036383235143269
J_HALF_AT_1 = 0.6713967071418031  # sqrt(2/pi) * sin(1)


def j0_reference(x: float, terms: int = 30) -> float:
    """Independent direct summation of the classical x = 0 order series."""
    total = 0.0
    for k in range(terms):
        total += (-1) ** k * (x / 2) ** (2 * k) / math.factorial(k) ** 2
    return total


class TestParameters:
    def test_kappa(self):
        assert BesselParameters(-0.5, 1.0, 1.0).kappa == 0.5
        assert BesselParameters(0.5, 1.0, 1.0).kappa == 1.5

    def test_rejects_zero_c(self):
        with pytest.raises(ValueError):
            BesselParameters(0.5, 1.0, 0.0)

    @pytest.mark.parametrize("p", [-1.0, -2.0, -3.0])
    def test_rejects_nonpositive_integer_kappa(self, p):
        # b = 1 makes kappa = p + 1
        with pytest.raises(ValueError):
            BesselParameters(p, 1.0, 1.0)

    def test_shifted(self):
        bp = BesselParameters(-0.5, 1.0, 2.0)
        assert bp.shifted(2).kappa == bp.kappa + 2
        assert bp.shifted(2).c == bp.c


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(3.7, 0) == 1.0

    def test_factorial(self):
        assert pochhammer(1.0, 5) == 120.0

    def test_half(self):
        assert pochhammer(0.5, 2) == 0.75

    def test_zero_propagates(self):
        assert pochhammer(0.0, 3) == 0.0
        assert pochhammer(-2.0, 4) == 0.0

    @given(st.floats(-4.5, 5.0), st.integers(0, 12), st.integers(0, 12))
    def test_split_identity(self, a, m, n):
        lhs = pochhammer(a, m + n)
        rhs = pochhammer(a, m) * pochhammer(a + m, n)
        if abs(lhs) < 1e-30:
            assert abs(rhs) < 1e-12
        else:
            assert abs(lhs - rhs) <= 1e-13 * abs(lhs)


class TestUSeries:
    def test_leading_coefficient_is_one(self):
        for p in (-0.5, 0.3, 2.0):
            s = u_series(BesselParameters(p, 1.0, 1 + 1j), 8)
            assert s.coeffs[0] == 1.0

    def test_cos_sqrt_coefficients(self):
        s = u_series(BesselParameters(-0.5, 1.0, 1.0), 4)
        assert s.coeffs[1] == pytest.approx(-0.5, abs=1e-16)
        assert s.coeffs[2] == pytest.approx(1 / 24, abs=1e-17)

    def test_sinc_sqrt_first_coefficient(self):
        s = u_series(BesselParameters(0.5, 1.0, 1.0), 2)
        assert s.coeffs[1] == pytest.approx(-1 / 6, abs=1e-17)

    def test_matches_pochhammer_formula(self):
        bp = BesselParameters(0.3, 1.2, 0.7 - 0.2j)
        s = u_series(bp, 10)
        for n in range(10):
            direct = (-bp.c / 4) ** n / (pochhammer(bp.kappa, n)
                                         * math.factorial(n))
            assert abs(s.coeffs[n] - direct) <= 1e-15 * max(1.0, abs(direct))

    def test_signs_alternate_for_positive_c(self):
        for p in (-0.5, 0.5, 1.5):
            s = u_series(BesselParameters(p, 1.0, 1.0), 20)
            signs = np.real(s.coeffs) * (-1.0) ** np.arange(20)
            assert np.all(signs > 0)


class TestClosedForms:
    def test_tag_parameter_map(self):
        assert ClosedFormTag.COS_SQRT.parameters.kappa == 0.5
        assert ClosedFormTag.SINC_SQRT.parameters.kappa == 1.5
        assert ClosedFormTag.THREE_HALVES_TRIG.parameters.kappa == 2.5

    def test_sinc_limit_at_zero(self):
        assert closed_form_eval(ClosedFormTag.SINC_SQRT, 0.0) == 1.0
        assert closed_form_eval(ClosedFormTag.THREE_HALVES_TRIG, 0.0) == 1.0

    def test_cos_sqrt_at_minus_one(self):
        v = closed_form_eval(ClosedFormTag.COS_SQRT, -1.0)
        assert v == pytest.approx(COSH1, abs=1e-14)

    def test_three_halves_at_minus_one(self):
        v = closed_form_eval(ClosedFormTag.THREE_HALVES_TRIG, -1.0)
        assert v == pytest.approx(THREE_OVER_E, abs=1e-14)

    def test_three_halves_small_z_is_smooth(self):
        # The Taylor fallback and the closed formula must agree near the
        # crossover so the switch introduces no jump.
        series = u_series(ClosedFormTag.THREE_HALVES_TRIG.parameters, 32)
        for z in (0.09, 0.11, 0.1j, -0.09 + 0.04j):
            assert abs(closed_form_eval(ClosedFormTag.THREE_HALVES_TRIG, z)
                       - series.evaluate(z)) < 2e-14

    def test_series_value_at_one_is_sin_one(self):
        s = u_series(BesselParameters(0.5, 1.0, 1.0), 64)
        assert abs(s.evaluate(1.0) - SIN1) < 1e-12

    def test_series_value_at_minus_one_is_cosh_one(self):
        s = u_series(BesselParameters(-0.5, 1.0, 1.0), 64)
        assert abs(s.evaluate(-1.0) - COSH1) < 1e-12

    @pytest.mark.parametrize("tag", list(ClosedFormTag))
    def test_series_agreement_on_grid(self, tag):
        series = u_series(tag.parameters, 64)
        grid = EvaluationGrid((0.25, 0.5, 0.9, 0.999), 512)
        pts = grid.points()
        sup = np.max(np.abs(series.evaluate(pts) - closed_form_eval(tag, pts)))
        assert sup < 1e-10


class TestWValue:
    def test_j_half_at_one(self):
        v = w_value(BesselParameters(0.5, 1.0, 1.0), 1.0)
        assert v == pytest.approx(J_HALF_AT_1, abs=1e-12)

    def test_j_zero_against_direct_summation(self):
        v = w_value(BesselParameters(0.0, 1.0, 1.0), 0.5)
        assert v == pytest.approx(j0_reference(0.5), abs=1e-12)

    def test_branch_cut_rejected(self):
        bp = BesselParameters(0.5, 1.0, 1.0)
        with pytest.raises(ValueError):
            w_value(bp, -0.3)
        with pytest.raises(ValueError):
            w_value(bp, 0.0)


class TestOdeResidualU:
    def test_truncation_residual_is_tiny(self):
        bp = BesselParameters(-0.5, 1.0, 1.0)
        s = u_series(bp, 64)
        grid = EvaluationGrid((0.25, 0.5, 0.9, 0.99), 256)
        assert ode_residual_u(bp, s, grid) < 1e-10

    def test_constant_is_not_a_solution(self):
        bp = BesselParameters(0.5, 1.0, 1.0)
        one = PowerSeries([1.0, 0.0, 0.0])
        grid = EvaluationGrid((0.5, 0.9), 64)
        residual = ode_residual_u(bp, one, grid)
        assert residual == pytest.approx(abs(bp.c) * 0.9, rel=1e-12)

    def test_origin_contributes_zero(self):
        bp = BesselParameters(0.5, 1.0, 1.0)
        s = u_series(bp, 16)
        assert ode_lhs_u(bp, s, 0.0) == 0.0

    def test_residual_decreases_as_order_doubles(self):
        bp = BesselParameters(-0.9, 1.0, 1.0)
        grid = EvaluationGrid((0.5, 0.9, 0.99), 128)
        residuals = [ode_residual_u(bp, u_series(bp, n), grid)
                     for n in (8, 16, 32, 64)]
        for a, b in zip(residuals, residuals[1:]):
            assert b <= a


class TestOdeResidualW:
    @pytest.mark.parametrize("p", [0.5, 0.0])
    def test_known_solutions(self, p):
        bp = BesselParameters(p, 1.0, 1.0)
        grid = EvaluationGrid((0.3, 0.6, 0.9), 255)
        assert ode_residual_w(bp, grid) < 1e-5

    def test_constant_is_not_a_solution(self):
        # For w == 1, p = 0, b = 1 the left side reduces to c z^2.
        bp = BesselParameters(0.0, 1.0, 1.0)
        zs = np.array([0.5 + 0.1j, 0.3j, 0.9])
        lhs = ode_lhs_w(bp, zs, w_func=lambda pts: np.ones_like(pts))
        assert np.allclose(lhs, bp.c * zs * zs, rtol=0, atol=1e-9)
        assert np.max(np.abs(lhs)) > 0.1

    def test_branch_cut_guard(self):
        bp = BesselParameters(0.5, 1.0, 1.0)
        grid = EvaluationGrid((0.9,), 256)  # even count hits the cut exactly
        with pytest.raises(NumericGuardError):
            ode_residual_w(bp, grid)

    def test_pointwise_lhs_small_off_axis(self):
        bp = BesselParameters(0.0, 1.0, 1.0)
        vals = ode_lhs_w(bp, np.array([0.5 + 0.2j, -0.4 + 0.3j]))
        assert np.all(np.abs(vals) < 1e-6)
