"""Command-line interface.

Subcommands::

    verify <config.json>     run one scenario from a configuration file
    suite --all --out DIR    run every scenario with defaults
    eval --preset NAME --z RE IM   evaluate a named function at one point

Exit status: 0 when every check passed, 1 when a check failed, 2 on
configuration errors, 3 when a numeric guard tripped (self-intersecting
target curve, branch-cut proximity, quadrature non-convergence).

All numeric console output uses 15 significant digits.  JSON reports are
canonical and byte-identical across runs with the same configuration and
seed; wall-clock runtime is printed to the console only.
"""

from __future__ import annotations

import argparse
import csv
import os
import re
import sys

from .bessel import BesselParameters, ClosedFormTag, closed_form_eval, u_series, w_value
from .errors import ConfigError, NumericGuardError
from .scenarios import (
    SCENARIO_NAMES,
    TOOL_VERSION,
    ScenarioConfig,
    apply_overrides,
    default_config,
    load_config,
    report_csv_rows,
    report_to_json_text,
    run_scenario,
)

_G = "%.15g"


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return _G % x
    return str(x)


def _print_check(check) -> None:
    if check.vacuous:
        status = "VACUOUS"
    elif check.passed:
        status = "PASS"
    elif check.expected_fail:
        status = "XFAIL"
    else:
        status = "FAIL"
    scalars = [(k, v) for k, v in check.detail.items()
               if isinstance(v, (bool, int, float, str))][:4]
    info = "  ".join(f"{k}={_fmt(v)}" for k, v in scalars)
    print(f"  [{status:7s}] {check.name}: {info}")


def _print_report(report) -> None:
    print(f"scenario: {report.scenario}  (tool {report.tool_version})")
    for check in report.checks:
        _print_check(check)
    verdict = "PASS" if report.overall_pass else "FAIL"
    print(f"  overall: {verdict}  runtime: {_G % report.runtime_seconds} s")


def _write_json(path: str, report) -> None:
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(report_to_json_text(report))


def _write_csv(path: str, report) -> None:
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "re_z", "im_z", "value"])
        for name, re_z, im_z, value in report_csv_rows(report):
            writer.writerow([name, _G % re_z, _G % im_z, _G % value])


def _parse_ladder(text: str):
    try:
        return [float(tok) for tok in text.split(",") if tok]
    except ValueError as exc:
        raise ConfigError(f"bad rho ladder {text!r}") from exc


def _with_overrides(cfg: ScenarioConfig, args) -> ScenarioConfig:
    ladder = _parse_ladder(args.rho_ladder) if args.rho_ladder else None
    return apply_overrides(cfg, order=args.order, rho_ladder=ladder,
                           angles=args.angles, seed=args.seed)


def _cmd_verify(args) -> int:
    cfg = _with_overrides(load_config(args.config), args)
    report = run_scenario(cfg)
    _print_report(report)
    json_path = args.json_out or cfg.output_path
    if json_path:
        _write_json(json_path, report)
        print(f"report written to {json_path}")
    if args.csv_out:
        _write_csv(args.csv_out, report)
        print(f"grid samples written to {args.csv_out}")
    return 0 if report.overall_pass else 1


def _cmd_suite(args) -> int:
    if not args.all:
        raise ConfigError("suite requires --all")
    os.makedirs(args.out, exist_ok=True)
    all_pass = True
    for name in SCENARIO_NAMES:
        cfg = _with_overrides(default_config(name), args)
        report = run_scenario(cfg)
        _print_report(report)
        _write_json(os.path.join(args.out, f"{name}.json"), report)
        if args.csv_out:
            _write_csv(os.path.join(args.csv_out, f"{name}.csv"), report)
        all_pass &= report.overall_pass
    print(f"suite: {'PASS' if all_pass else 'FAIL'}  "
          f"(reports in {args.out})")
    return 0 if all_pass else 1


_PARAM_PRESET = re.compile(
    r"^([uw])\((-?[\d.eE+]+),(-?[\d.eE+]+),(-?[\d.eE+]+)\)$")
_QUAD_PRESET = re.compile(r"^quadratic\((-?[\d.eE+]+)\)$")

_TAGS = {
    "cos_sqrt": ClosedFormTag.COS_SQRT,
    "sinc_sqrt": ClosedFormTag.SINC_SQRT,
    "three_halves_trig": ClosedFormTag.THREE_HALVES_TRIG,
}


def _eval_preset(name: str, z: complex, order: int) -> complex:
    name = name.strip()
    if name == "koebe":
        if z == 1:
            raise ConfigError("koebe preset has a pole at z = 1")
        return z / (1.0 - z)
    if name in _TAGS:
        return complex(closed_form_eval(_TAGS[name], z))
    m = _QUAD_PRESET.match(name)
    if m:
        a = float(m.group(1))
        return z + a * z * z
    m = _PARAM_PRESET.match(name)
    if m:
        kind = m.group(1)
        p, b, c = (float(m.group(i)) for i in (2, 3, 4))
        params = BesselParameters(p, b, c)
        if kind == "u":
            return u_series(params, order).evaluate(z)
        return w_value(params, z, order)
    raise ConfigError(
        f"unknown preset {name!r}; use koebe, quadratic(a), cos_sqrt, "
        "sinc_sqrt, three_halves_trig, u(p,b,c) or w(p,b,c)"
    )


def _cmd_eval(args) -> int:
    z = complex(args.z[0], args.z[1])
    try:
        value = _eval_preset(args.preset, z, args.order or 64)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    print(f"{args.preset} at z = ({_G % z.real}, {_G % z.imag}): "
          f"value = ({_G % value.real}, {_G % value.imag})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselsub",
        description="Desk-scale numerical verification of subordination "
                    "properties of Bessel-type convolution operators.",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_numeric_flags(p):
        p.add_argument("--order", type=int, default=None,
                       help="truncation order for all series")
        p.add_argument("--rho-ladder", dest="rho_ladder", default=None,
                       help="comma-separated radii approaching 1")
        p.add_argument("--angles", type=int, default=None,
                       help="angular samples per radius")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized sweeps")

    p_verify = sub.add_parser("verify", help="run one scenario from a config file")
    p_verify.add_argument("config", help="path to a scenario configuration (JSON)")
    add_numeric_flags(p_verify)
    p_verify.add_argument("--json-out", default=None,
                          help="write the JSON report here (overrides config)")
    p_verify.add_argument("--csv-out", default=None,
                          help="write grid samples as CSV here")
    p_verify.set_defaults(func=_cmd_verify)

    p_suite = sub.add_parser("suite", help="run every scenario with defaults")
    p_suite.add_argument("--all", action="store_true",
                         help="run the full scenario set")
    p_suite.add_argument("--out", required=True,
                         help="directory for the JSON reports")
    add_numeric_flags(p_suite)
    p_suite.add_argument("--csv-out", default=None,
                         help="directory for per-scenario CSV samples")
    p_suite.set_defaults(func=_cmd_suite)

    p_eval = sub.add_parser("eval", help="evaluate a named preset at one point")
    p_eval.add_argument("--preset", required=True)
    p_eval.add_argument("--z", nargs=2, type=float, required=True,
                        metavar=("RE", "IM"))
    p_eval.add_argument("--order", type=int, default=64)
    p_eval.set_defaults(func=_cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericGuardError as exc:
        print(f"numeric guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
