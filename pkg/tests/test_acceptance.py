"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
per-criterion lines inline).  Every tolerance is pinned here; nothing is
deferred to later calibration.
"""

import math
import os
import time

import numpy as np

from besselsub.bessel import (
    BesselParameters,
    ClosedFormTag,
    closed_form_eval,
    ode_residual_u,
    ode_residual_w,
    u_series,
)
from besselsub.cli import main as cli_main
from besselsub.geometry import (
    admissibility_check,
    check_disk_subordination,
    check_subordination,
    gamma_from_pair,
    gamma_lambda_kappa,
    key_inequality_check,
)
from besselsub.operators import (
    LiberaSpec,
    libera_quadrature_oracle,
    libera_recurrence_residual,
    libera_transform,
    recurrence_residual,
)
from besselsub.scenarios import default_config, run_scenario
from besselsub.series import EvaluationGrid, PowerSeries

GAMMA_MAX = (2.0 - math.sqrt(2.0)) / 4.0


def _report(number: int, description: str, passed: bool) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {number}: {description}")
    assert passed, f"criterion {number} failed: {description}"


def _random_normalized(rng, order=64):
    coeffs = np.zeros(order, dtype=np.complex128)
    coeffs[1] = 1.0
    coeffs[2:] = rng.uniform(-1, 1, order - 2) + 1j * rng.uniform(-1, 1, order - 2)
    return PowerSeries(coeffs)


def _random_kappa(rng, lo=-0.999, hi=5.0):
    while True:
        k = float(rng.uniform(lo, hi))
        if abs(k - round(k)) > 1e-6 or round(k) > 0:
            return k


def _random_c(rng):
    while True:
        c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(c) > 1e-6:
            return c


def test_criterion_01_recurrence_identity():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(100):
        f = _random_normalized(rng, 64)
        kappa = _random_kappa(rng)
        bp = BesselParameters(kappa - 1.0, 1.0, _random_c(rng))
        worst = max(worst, recurrence_residual(bp, f))
    elapsed = time.perf_counter() - t0
    _report(1, f"recurrence identity residual {worst:.3e} < 1e-12 "
               f"in {elapsed:.2f} s (< 1 s)",
            worst < 1e-12 and elapsed < 1.0)


def test_criterion_02_closed_form_oracles():
    grid = EvaluationGrid((0.25, 0.5, 0.9, 0.999), 512)
    pts = grid.points()
    worst = 0.0
    for tag in ClosedFormTag:
        series = u_series(tag.parameters, 64)
        worst = max(worst, float(np.max(np.abs(
            series.evaluate(pts) - closed_form_eval(tag, pts)))))
    _report(2, f"closed-form sup difference {worst:.3e} < 1e-10 "
               "on 4 x 512 grid", worst < 1e-10)


def test_criterion_03_ode_residuals():
    u_grid = EvaluationGrid((0.25, 0.5, 0.9, 0.99), 512)
    worst_u = 0.0
    for (p, b, c) in [(-0.5, 1, 1), (0.5, 1, 1), (1.5, 1, 1), (-1.9, 1, 1)]:
        bp = BesselParameters(p, b, c)
        worst_u = max(worst_u, ode_residual_u(bp, u_series(bp, 64), u_grid))
    w_grid = EvaluationGrid((0.3, 0.6, 0.9), 511)
    worst_w = 0.0
    for (p, b, c) in [(0.5, 1.0, 1.0), (0.0, 1.0, 1.0)]:
        worst_w = max(worst_w, ode_residual_w(BesselParameters(p, b, c), w_grid))
    _report(3, f"ODE residuals: normalized {worst_u:.3e} < 1e-10, "
               f"original {worst_w:.3e} < 1e-5",
            worst_u < 1e-10 and worst_w < 1e-5)


def test_criterion_04_gamma_constants():
    at_origin = abs(gamma_lambda_kappa(0.0, 0.0) - GAMMA_MAX)
    rng = np.random.default_rng(4)
    worst_agreement = 0.0
    for kappa in rng.uniform(-0.95, 5.0, 50):
        y = kappa + 1.0
        direct = (1.0 + y * y - math.sqrt(1.0 + y ** 4)) / (4.0 * y)
        worst_agreement = max(worst_agreement,
                              abs(direct - gamma_lambda_kappa(0.0, float(kappa))))
    lams = np.linspace(0.0, 0.995, 200)
    kaps = np.linspace(-0.995, 3.0, 200)
    values = np.array([[gamma_from_pair(1.0 - l, k + 1.0) for k in kaps]
                       for l in lams])
    in_range = values.min() > 0.0 and values.max() <= GAMMA_MAX + 1e-12
    _report(4, f"constants: |gamma(0,0)-(2-sqrt2)/4| = {at_origin:.1e} < 1e-14, "
               f"two-form agreement {worst_agreement:.1e} < 1e-14, "
               f"range (0, {GAMMA_MAX:.8f}] on 200x200 grid",
            at_origin < 1e-14 and worst_agreement < 1e-14 and in_range)


def test_criterion_05_admissibility_and_key_inequality():
    s = np.linspace(-50.0, 50.0, 10000)
    min_margin = np.inf
    for lam in (0.0, 0.5, 0.9):
        for kappa in (-0.5, 0.5, 3.0):
            report = admissibility_check(lam, kappa, s)
            min_margin = min(min_margin, report.infimum)
    rng = np.random.default_rng(5)
    pairs_ok = all(key_inequality_check(float(l), float(k))
                   for l, k in zip(rng.uniform(0, 1, 10000),
                                   rng.uniform(-0.999, 10, 10000)))
    _report(5, f"admissibility sup Re xi <= 0 (min margin {min_margin:.3e}) "
               "and key inequality on 1e4 random pairs",
            min_margin > 0.0 and pairs_ok)


def test_criterion_06_trig_chain_suprema():
    report = run_scenario(default_config("trig_chain"))
    by_name = {c.name: c for c in report.checks}
    stages = by_name["suprema_ordering"].detail["stages"]
    sups = [st["extrapolated_sup"] for st in stages]
    refs = [math.cosh(1.0) - 1.0, math.sinh(1.0) - 1.0, 3.0 / math.e - 1.0]
    deviations = [abs(s - r) for s, r in zip(sups, refs)]
    ordering = sups[0] > sups[1] > sups[2]
    for row in by_name["bound_table"].detail["rows"]:
        print(f"    a={row['a']}: stage {row['stage']} sup={row['sup']:.9f} "
              f"bound={row['bound']:.9f} "
              f"holds_on_full_disk={row['premise_holds_on_full_disk']}")
    _report(6, "trig suprema within 1e-6 of cosh(1)-1, sinh(1)-1, 3/e-1 "
               f"(deviations {max(deviations):.2e}) with strict ordering",
            max(deviations) < 1e-6 and ordering)


def test_criterion_07_subordination_oracle_soundness():
    z = PowerSeries.from_coefficients([0.0, 1.0])
    half = PowerSeries.from_coefficients([0.0, 0.5])
    double = PowerSeries.from_coefficients([0.0, 2.0])
    square = PowerSeries.from_coefficients([0.0, 0.0, 1.0])
    table_ok = (check_subordination(half, z, 0.97, 0.999).holds
                and not check_subordination(double, z, 0.97, 0.999).holds
                and check_subordination(square, z, 0.97, 0.999).holds)

    rng = np.random.default_rng(7)
    worst = 0.0
    agree = True
    for _ in range(20):
        eps = complex(rng.uniform(0.05, 0.3)
                      * np.exp(1j * rng.uniform(0, 2 * np.pi)))
        radius = float(rng.uniform(0.3, 0.6))
        g = PowerSeries.from_coefficients([1.0, eps])
        disk = check_disk_subordination(g, radius)
        rho_target = 0.99995
        target = PowerSeries.from_coefficients([1.0, radius / rho_target])
        general = check_subordination(g, target, 0.9999, rho_target, m=2048)
        agree &= disk.holds == general.holds
        worst = max(worst, abs(disk.margin - general.margin))
    _report(7, "verdict table (z/2 in, 2z out, z^2 in) and disk-vs-general "
               f"margin discrepancy {worst:.2e} < 1e-6 on 20 linear cases",
            table_ok and agree and worst < 1e-6)


def test_criterion_08_libera_operator():
    rng = np.random.default_rng(8)
    worst_quad = 0.0
    for _ in range(100):
        mu = float(rng.uniform(-0.9, 5.0))
        f = _random_normalized(rng, 16)
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        spec = LiberaSpec(mu)
        transformed = libera_transform(spec, f).evaluate(z)
        worst_quad = max(worst_quad,
                         abs(transformed - libera_quadrature_oracle(spec, f, z)))
    worst_rec = 0.0
    for _ in range(20):
        mu = float(rng.uniform(-0.9, 5.0))
        kappa = _random_kappa(rng)
        bp = BesselParameters(kappa - 1.0, 1.0, _random_c(rng))
        worst_rec = max(worst_rec, libera_recurrence_residual(
            LiberaSpec(mu), bp, _random_normalized(rng, 64)))
    _report(8, f"averaging operator: quadrature agreement {worst_quad:.2e} "
               f"< 1e-8, recurrence residual {worst_rec:.2e} < 1e-12",
            worst_quad < 1e-8 and worst_rec < 1e-12)


def test_criterion_09_end_to_end_demos():
    t0 = time.perf_counter()
    reports = {name: run_scenario(default_config(name))
               for name in ("theorem1", "corollary_lambda0", "trig_chain",
                            "libera_sandwich", "identity_suite",
                            "condition_sweep")}
    elapsed = time.perf_counter() - t0
    demos_pass = (reports["theorem1"].overall_pass
                  and reports["libera_sandwich"].overall_pass)
    stable = True
    for name in ("theorem1", "libera_sandwich"):
        for check in reports[name].checks:
            if check.kind == "subordination":
                stable &= check.detail["stable"]
    _report(9, f"end-to-end demos pass with stable ladder verdicts, "
               f"full suite in {elapsed:.1f} s (< 30 s)",
            demos_pass and stable and elapsed < 30.0)


def test_criterion_10_determinism(tmp_path):
    out_a = tmp_path / "run_a"
    out_b = tmp_path / "run_b"
    code_a = cli_main(["suite", "--all", "--out", str(out_a), "--seed", "0"])
    code_b = cli_main(["suite", "--all", "--out", str(out_b), "--seed", "0"])
    identical = True
    for name in sorted(os.listdir(out_a)):
        identical &= ((out_a / name).read_bytes() == (out_b / name).read_bytes())
    _report(10, "two seeded suite runs produce byte-identical JSON reports",
            code_a == 0 and code_b == 0 and identical
            and len(os.listdir(out_a)) == 6)
