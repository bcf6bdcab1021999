"""Numerical verification of subordination properties of Bessel-type
convolution operators on the unit disk.

The package provides exact truncated power-series arithmetic, the
generalized Bessel-type functions with closed-form trigonometric oracles,
the associated convolution and averaging operators as exact coefficient
maps, a winding-number subordination oracle, and scenario runners that
bundle the individual checks into deterministic JSON reports.
"""

from .bessel import (
    BesselParameters,
    ClosedFormTag,
    closed_form_eval,
    ode_lhs_u,
    ode_lhs_w,
    ode_residual_u,
    ode_residual_w,
    pochhammer,
    u_coefficient_rule,
    u_series,
    w_value,
)
from .errors import ConfigError, NumericGuardError
from .geometry import (
    BoundaryCurve,
    ConditionReport,
    SubordinationVerdict,
    admissibility_check,
    boundary_curve,
    check_convexity_condition,
    check_disk_subordination,
    check_subordination,
    convexity_functional,
    gamma_from_pair,
    gamma_lambda_kappa,
    gamma_mu,
    key_inequality_check,
    loewner_chain_check,
    winding_number,
)
from .operators import (
    BlendSpec,
    LiberaSpec,
    apply_B,
    blend_phi,
    libera_quadrature_oracle,
    libera_recurrence_residual,
    libera_transform,
    recurrence_residual,
)
from .scenarios import TOOL_VERSION, ScenarioConfig, run_scenario
from .series import DEFAULT_GRID, RHO_LADDER, EvaluationGrid, PowerSeries, tail_bound

__version__ = TOOL_VERSION
