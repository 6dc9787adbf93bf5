"""Command line interface.

Subcommands: presets, sweep, check, threshold, minima, constants.
Oscillation parameters come from an experiment preset or explicit flags;
a JSON config file named by the NUNAQC_CONFIG environment variable fills
gaps, and flags always win.  Exit codes: 0 success, 1 property
violation, 2 usage or config error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from importlib import resources

from .analysis import (
    QUANTITIES,
    SPACINGS,
    SweepSpec,
    asymptotic_probabilities,
    check_identity,
    find_local_minima,
    sweep,
    threshold_angle,
)
from .naqc import MEASURES, naqc_bound, naqc_closed
from .oscillation import (
    KAMLAND_ANGLE_READINGS,
    MODELS,
    PRESET_NAMES,
    OscParams,
    params_from_config,
    preset,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

CSV_COLUMNS = (
    "L_m",
    "P_surv",
    "P_trans",
    "U",
    "U_bound",
    "N_l1",
    "N_re",
    "N_sk",
    "att_l1",
    "att_re",
    "att_sk",
    "model",
)

UNITARITY_ATOL = 1e-12
IDENTITY_ATOL = 1e-9
HIERARCHY_ATOL = 1e-12

CONFIG_ENV_VAR = "NUNAQC_CONFIG"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved inputs of one sweep-style command."""

    params: OscParams
    label: str
    l_min_m: float
    l_max_m: float
    points: int
    spacing: str
    model: str
    audit_fraction: float


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def _bool_field(flag: bool) -> str:
    return "true" if flag else "false"


def _sweep_defaults() -> dict:
    with resources.files("nunaqc").joinpath("data/sweep_defaults.json").open(
        "r", encoding="utf-8"
    ) as fh:
        return json.load(fh)


def _file_config() -> dict:
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return cfg


def _pick(*values):
    for v in values:
        if v is not None:
            return v
    return None


def _resolve_run(args) -> RunConfig:
    file_cfg = _file_config()

    theta_flags = [
        name
        for name, v in (
            ("--theta-rad", args.theta_rad),
            ("--sin2-2theta", args.sin2_2theta),
            ("--tan2-theta", args.tan2_theta),
        )
        if v is not None
    ]
    if len(theta_flags) > 1:
        raise ConfigError(f"give at most one angle flag, got {' and '.join(theta_flags)}")
    if args.experiment and (theta_flags or args.dm2_ev2 is not None):
        raise ConfigError("--experiment conflicts with explicit --theta-*/--dm2-ev2 flags")

    param_cfg: dict = {}
    label = "custom"
    exp_defaults: dict = {}
    if args.experiment:
        experiment = args.experiment
    elif theta_flags:
        experiment = None
    elif "name" in file_cfg:
        experiment = file_cfg["name"]
    else:
        experiment = None

    if experiment is not None:
        label = experiment
        defaults = _sweep_defaults()["experiments"]
        if experiment not in defaults:
            raise ConfigError(f"unknown experiment {experiment!r}, expected one of {PRESET_NAMES}")
        exp_defaults = defaults[experiment]
        param_cfg["name"] = experiment
        if "kamland_angle_reading" in file_cfg:
            param_cfg["kamland_angle_reading"] = file_cfg["kamland_angle_reading"]
    else:
        if args.theta_rad is not None:
            param_cfg["theta_rad"] = args.theta_rad
        elif args.sin2_2theta is not None:
            param_cfg["sin2_2theta"] = args.sin2_2theta
        elif args.tan2_theta is not None:
            param_cfg["tan2_theta"] = args.tan2_theta
        else:
            for key in ("theta_rad", "sin2_2theta", "tan2_theta"):
                if key in file_cfg:
                    param_cfg[key] = file_cfg[key]
        if not param_cfg:
            raise ConfigError(
                "no oscillation parameters: give --experiment, an angle flag, "
                f"or a config file via {CONFIG_ENV_VAR}"
            )
        dm2 = _pick(args.dm2_ev2, file_cfg.get("dm2_ev2"))
        if dm2 is None:
            raise ConfigError("explicit parameters also need --dm2-ev2")
        param_cfg["dm2_ev2"] = dm2

    energy = _pick(args.energy_mev, file_cfg.get("energy_mev"), exp_defaults.get("energy_mev"))
    if energy is None:
        raise ConfigError("missing --energy-mev")
    param_cfg["energy_mev"] = energy
    param_cfg["sigma_x_m"] = _pick(
        args.sigma_x_m, file_cfg.get("sigma_x_m"), exp_defaults.get("sigma_x_m"), 0.0
    )
    param_cfg["xi"] = _pick(args.xi, file_cfg.get("xi"), exp_defaults.get("xi"), 0.0)

    try:
        params = params_from_config(param_cfg)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    l_min = _pick(args.lmin_m, file_cfg.get("lmin_m"), exp_defaults.get("lmin_m"), 0.0)
    l_max = _pick(args.lmax_m, file_cfg.get("lmax_m"), exp_defaults.get("lmax_m"))
    if l_max is None:
        raise ConfigError("missing --lmax-m")
    return RunConfig(
        params=params,
        label=label,
        l_min_m=float(l_min),
        l_max_m=float(l_max),
        points=int(_pick(args.points, file_cfg.get("points"), exp_defaults.get("points"), 400)),
        spacing=_pick(args.spacing, file_cfg.get("spacing"), "linear"),
        model=_pick(args.model, file_cfg.get("model"), "wavepacket"),
        audit_fraction=float(_pick(args.audit_fraction, file_cfg.get("audit_fraction"), 0.01)),
    )


def _spec(run: RunConfig) -> SweepSpec:
    try:
        return SweepSpec(
            params=run.params,
            l_min_m=run.l_min_m,
            l_max_m=run.l_max_m,
            points=run.points,
            spacing=run.spacing,
            model=run.model,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _emit(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _rows_to_csv(rows) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                (
                    _g17(row.baseline_m),
                    _g17(row.probs.p_survival),
                    _g17(row.probs.p_transition),
                    _g17(row.eur.u),
                    _g17(row.eur.u_bound),
                    _g17(row.naqc.n_l1),
                    _g17(row.naqc.n_re),
                    _g17(row.naqc.n_sk),
                    _bool_field(row.naqc.attained_l1),
                    _bool_field(row.naqc.attained_re),
                    _bool_field(row.naqc.attained_sk),
                    row.model,
                )
            )
        )
    return "\n".join(lines) + "\n"


def _rows_to_json(rows) -> str:
    out = []
    for row in rows:
        out.append(
            {
                "L_m": row.baseline_m,
                "P_surv": row.probs.p_survival,
                "P_trans": row.probs.p_transition,
                "U": row.eur.u,
                "U_bound": row.eur.u_bound,
                "N_l1": row.naqc.n_l1,
                "N_re": row.naqc.n_re,
                "N_sk": row.naqc.n_sk,
                "att_l1": row.naqc.attained_l1,
                "att_re": row.naqc.attained_re,
                "att_sk": row.naqc.attained_sk,
                "model": row.model,
            }
        )
    return json.dumps({"rows": out}, indent=2) + "\n"


def cmd_presets(args) -> int:
    header = f"{'name':<9} {'angle':<20} {'theta_rad':<16} {'theta_deg':<10} {'dm2_ev2':<10} channel"
    lines = [header, "-" * len(header)]
    for name in PRESET_NAMES:
        p = preset(name)
        angle = f"{p.angle_parameterization}={p.angle_value:g}"
        lines.append(
            f"{p.name:<9} {angle:<20} {p.theta_rad:<16.10g} "
            f"{math.degrees(p.theta_rad):<10.4g} {p.dm2_ev2:<10.4g} {p.channel}"
        )
        if p.notes:
            lines.append(f"{'':<9} note: {p.notes}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_sweep(args) -> int:
    run = _resolve_run(args)
    rows = sweep(_spec(run), audit_fraction=run.audit_fraction)
    text = _rows_to_csv(rows) if args.format == "csv" else _rows_to_json(rows)
    _emit(args.out, text)
    return EXIT_OK


def cmd_check(args) -> int:
    run = _resolve_run(args)
    rows = sweep(_spec(run), audit_fraction=0.0)
    if getattr(args, "inject_corruption", False) and rows:
        victim = rows[len(rows) // 2]
        object.__setattr__(victim.probs, "p_transition", victim.probs.p_transition + 1e-3)

    max_unitarity = 0.0
    max_doubling = 0.0
    max_complement = 0.0
    max_dual_path = 0.0
    min_margin_re = math.inf
    min_margin_sk = math.inf
    broken_rows = 0
    for row in rows:
        unitarity = abs(row.probs.p_survival + row.probs.p_transition - 1.0)
        max_unitarity = max(max_unitarity, unitarity)
        min_margin_re = min(min_margin_re, row.naqc.n_l1 - row.naqc.n_re)
        min_margin_sk = min(min_margin_sk, row.naqc.n_l1 - row.naqc.n_sk)
        if unitarity > UNITARITY_ATOL:
            broken_rows += 1
            continue
        report = check_identity(row.probs)
        max_doubling = max(max_doubling, report.deviation_doubling)
        max_complement = max(max_complement, report.deviation_complement)
        max_dual_path = max(
            max_dual_path,
            abs(row.eur.u - report.u),
            abs(row.eur.u_bound - report.u_bound),
            abs(row.naqc.n_re - report.n_re),
        )

    failures = []
    if broken_rows:
        failures.append(f"{broken_rows} rows break unitarity beyond {UNITARITY_ATOL}")
    if max_doubling > IDENTITY_ATOL:
        failures.append("doubling identity out of tolerance")
    if max_complement > IDENTITY_ATOL:
        failures.append("score-complement identity out of tolerance")
    if max_dual_path > IDENTITY_ATOL:
        failures.append("closed form disagrees with matrix pipeline")
    if min_margin_re < -HIERARCHY_ATOL or min_margin_sk < -HIERARCHY_ATOL:
        failures.append("l1 score fails to dominate")

    print(f"rows checked: {len(rows)}")
    print(f"max |P_surv + P_trans - 1|: {max_unitarity:.3e}")
    print(f"max |U - 2 U_bound|: {max_doubling:.3e}")
    print(f"max |U - 2 (3 - N_re)|: {max_complement:.3e}")
    print(f"max closed-vs-matrix deviation: {max_dual_path:.3e}")
    print(f"min N_l1 - N_re: {min_margin_re:.3e}")
    print(f"min N_l1 - N_sk: {min_margin_sk:.3e}")
    if failures:
        print("FAIL: " + "; ".join(failures))
        return EXIT_VIOLATION
    print("PASS")
    return EXIT_OK


def cmd_threshold(args) -> int:
    measure = args.measure
    theta = threshold_angle(measure)
    bound = naqc_bound(measure)
    score = naqc_closed(asymptotic_probabilities(theta), measure)
    print(f"measure: {measure}")
    print(f"bound: {_g17(bound)}")
    print(f"threshold_theta_rad: {_g17(theta)}")
    print(f"threshold_theta_deg: {_g17(math.degrees(theta))}")
    print(f"asymptotic_score_at_threshold: {_g17(score)}")
    if measure == "sk":
        print("note: degenerate threshold, any positive angle exceeds the bound")
    return EXIT_OK


def cmd_minima(args) -> int:
    run = _resolve_run(args)
    try:
        minima = find_local_minima(_spec(run), args.quantity)
    except ValueError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    lines = [f"minimum: L_m={_g17(pos)} value={_g17(val)}" for pos, val in minima]
    print("\n".join(lines))
    if args.out != "-":
        text = "L_m,value\n" + "".join(f"{_g17(p)},{_g17(v)}\n" for p, v in minima)
        _emit(args.out, text)
    return EXIT_OK


def cmd_constants(args) -> int:
    bounds = {measure: naqc_bound(measure) for measure in MEASURES}
    _emit(args.out, json.dumps(bounds, indent=2) + "\n")
    return EXIT_OK


def _add_run_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--experiment", choices=PRESET_NAMES, help="use stored experiment parameters")
    sp.add_argument("--theta-rad", type=float, help="mixing angle in radians")
    sp.add_argument("--sin2-2theta", type=float, help="mixing angle as sin^2(2 theta)")
    sp.add_argument("--tan2-theta", type=float, help="mixing angle as tan^2(theta)")
    sp.add_argument("--dm2-ev2", type=float, help="mass-squared splitting in eV^2")
    sp.add_argument("--energy-mev", type=float, help="neutrino energy in MeV")
    sp.add_argument("--sigma-x-m", type=float, help="wave-packet width in meters")
    sp.add_argument("--xi", type=float, help="localization parameter")
    sp.add_argument("--lmin-m", type=float, help="sweep start baseline in meters")
    sp.add_argument("--lmax-m", type=float, help="sweep end baseline in meters")
    sp.add_argument("--points", type=int, help="number of grid points")
    sp.add_argument("--spacing", choices=SPACINGS, help="grid spacing")
    sp.add_argument("--model", choices=MODELS, help="probability model")
    sp.add_argument("--audit-fraction", type=float, help="fraction of rows re-checked via the matrix pipeline")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nunaqc",
        description="Entropic uncertainty and coherence steering scores of oscillating neutrinos.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("presets", help="print stored experiment parameters")
    sp.set_defaults(func=cmd_presets)

    sp = sub.add_parser("sweep", help="scan baselines and emit per-row quantities")
    _add_run_flags(sp)
    sp.add_argument("--out", default="-", help="output path, '-' for stdout")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("check", help="verify identities, hierarchy and unitarity over a sweep")
    _add_run_flags(sp)
    sp.add_argument("--inject-corruption", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("threshold", help="mixing angle at which a measure's bound is crossed")
    sp.add_argument("measure", choices=MEASURES)
    sp.set_defaults(func=cmd_threshold)

    sp = sub.add_parser("minima", help="local minima of a sweep quantity")
    _add_run_flags(sp)
    sp.add_argument("--quantity", choices=QUANTITIES, default="n_re")
    sp.add_argument("--out", default="-", help="optional CSV path for the minima")
    sp.set_defaults(func=cmd_minima)

    sp = sub.add_parser("constants", help="emit the steering-score bounds as JSON")
    sp.add_argument("--out", default="-", help="output path, '-' for stdout")
    sp.set_defaults(func=cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
