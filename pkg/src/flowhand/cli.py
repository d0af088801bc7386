"""Command-line front end.

Subcommands:

  simulate       run a scenario file, emit the per-step CSV
  sweep          thresholds vs one config key over a list of values
  design-search  tune the switch and orifice for target thresholds
  table1         prototype-table validation report
  validate       self-check battery against the bench anchors

Exit codes: 0 success, 1 config or usage error, 2 validation mismatch.
Warnings and task outcomes go to stderr so stdout stays machine-readable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, load_system, system_to_dict
from .core import lpm_to_m3s, m3s_to_lpm
from .fcs import steady_outputs
from .scenario import (
    DesignTargets,
    Scenario,
    Segment,
    SimulationError,
    design_search,
    injection_displacement,
    load_scenario,
    run_scenario,
    state_thresholds,
    sweep,
    sweep_csv,
    validate_table1,
)
from .system import Q2_ONSET_LPM, Q_AB_LPM, Q_BC_LPM
from .tasks import GraspScene, can_grasp, payload
from .venturi import (
    InfeasibleDesignError,
    activation_threshold,
    injection_active,
    lubricant_column,
    q2_activation_threshold,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _warn(lines) -> None:
    for line in lines:
        print(f"warning: {line}", file=sys.stderr)


def _cmd_simulate(args) -> int:
    system = load_system(args.config)
    scenario, scene = load_scenario(args.scenario)
    _warn(scenario.warnings())
    trace = run_scenario(scenario, system, scene)
    _emit(trace.to_csv(), args.out)
    for name, value in (("grasp", trace.grasp_ok), ("lift", trace.lift_ok),
                        ("place", trace.place_outcome), ("pivot", trace.pivot_ok)):
        if value is not None:
            shown = value.value if hasattr(value, "value") else ("ok" if value else "failed")
            print(f"{name}: {shown}", file=sys.stderr)
    return 0


def _cmd_sweep(args) -> int:
    system = load_system(args.config)
    scenario = scene = None
    if args.scenario:
        scenario, scene = load_scenario(args.scenario)
        _warn(scenario.warnings())
    values = []
    for chunk in args.values.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            values.append(float(chunk))
        except ValueError:
            raise ConfigError(f"--values: not a number: {chunk!r}") from None
    rows = sweep(args.param, values, system, scenario, scene)
    _emit(sweep_csv(rows, with_scenario=scenario is not None), args.out)
    return 0


def _cmd_design_search(args) -> int:
    system = load_system(args.config)
    targets = DesignTargets(q_ab_lpm=args.q_ab, q_bc_lpm=args.q_bc,
                            q2_activation_lpm=args.q2)
    tuned, report = design_search(targets, system)
    scanned = ", ".join("none" if s is None else f"{s:.2f}" for s in report.scanned)
    print(f"targets   (L/min): q_ab {targets.q_ab_lpm:g}, q_bc {targets.q_bc_lpm:g}, "
          f"q2 onset {targets.q2_activation_lpm:g}")
    print(f"bisection (L/min): q_ab {report.achieved[0]:.2f}, "
          f"q_bc {report.achieved[1]:.2f}, q2 onset {report.achieved[2]:.2f}")
    print(f"grid scan (L/min): {scanned}")
    print(f"within {report.tolerance_lpm:g} L/min: "
          f"{'yes' if report.within_tolerance() else 'no'}")
    if args.out:
        Path(args.out).write_text(json.dumps(system_to_dict(tuned), indent=2) + "\n")
        print(f"tuned config written to {args.out}")
    return 0


def _cmd_table1(args) -> int:
    report = validate_table1()
    _emit(report.to_text(), args.out)
    return 0 if report.all_match() else 2


def _protocol_scenario() -> Scenario:
    """Stepped holds through the motion band, then the injection command."""
    holds = [Segment(duration=1.0, q_src=lpm_to_m3s(q))
             for q in (10.0, 20.0, 30.0, 40.0, 50.0)]
    return Scenario(name="protocol", timestep=0.01,
                    segments=tuple(holds + [Segment(duration=1.0, q_src=lpm_to_m3s(150.0))]))


def _cmd_validate(args) -> int:
    system = load_system(args.config)
    consts = system.consts
    checks: list[tuple[str, bool, str]] = []

    report = validate_table1(consts=consts)
    checks.append(("table listed classification", report.listed_matches() == 4,
                   f"{report.listed_matches()}/4"))
    checks.append(("table recomputed forces", report.model_matches() == 4
                   and report.max_f1_error() <= 0.15,
                   f"{report.model_matches()}/4, max f1 error "
                   f"{100 * report.max_f1_error():.1f}%"))

    q_ab, q_bc = state_thresholds(system.fcs, consts)
    ab = None if q_ab is None else m3s_to_lpm(q_ab)
    bc = None if q_bc is None else m3s_to_lpm(q_bc)
    checks.append(("lever flip", ab is not None and abs(ab - Q_AB_LPM) <= 0.1,
                   f"{'none' if ab is None else f'{ab:.2f}'} L/min vs {Q_AB_LPM}"))
    checks.append(("pinch-off flip", bc is not None and abs(bc - Q_BC_LPM) <= 1.0,
                   f"{'none' if bc is None else f'{bc:.2f}'} L/min vs {Q_BC_LPM}"))

    act = activation_threshold(system.venturi, system.fcs, consts)
    act_lpm = None if act is None else m3s_to_lpm(act)
    q2_on = q2_activation_threshold(system.venturi, consts)
    q2_lpm = None if q2_on is None else m3s_to_lpm(q2_on)
    checks.append(("injection activation",
                   act_lpm is not None and abs(act_lpm - Q_BC_LPM) <= 1.0,
                   f"{'none' if act_lpm is None else f'{act_lpm:.2f}'} L/min vs {Q_BC_LPM}"))
    checks.append(("injection-line onset",
                   q2_lpm is not None and abs(q2_lpm - Q2_ONSET_LPM) <= 1.0,
                   f"{'none' if q2_lpm is None else f'{q2_lpm:.2f}'} L/min vs {Q2_ONSET_LPM}"))

    def injecting_at(q_lpm: float) -> bool:
        out = steady_outputs(lpm_to_m3s(q_lpm), system.fcs, consts)
        h_l = lubricant_column(lpm_to_m3s(q_lpm), out.q2, system.venturi, consts)
        return injection_active(h_l, system.venturi.h_t)

    checks.append(("injection gating", not injecting_at(50.0) and injecting_at(150.0),
                   "off at 50 L/min, on at 150 L/min"))

    lift = payload(0.38, system.hand, system.hand.mu_high)
    wide = GraspScene(object_width=0.073, object_mass=0.05)
    fits = GraspScene(object_width=0.072, object_mass=0.05)
    checks.append(("payload", abs(lift - 1.5) / 1.5 <= 0.02, f"{lift:.3f} N vs 1.5 N"))
    checks.append(("opening gate", (not can_grasp(wide, 0.38, system.hand, consts))
                   and can_grasp(fits, 0.38, system.hand, consts),
                   "73 mm rejected, 72 mm accepted"))

    trace = run_scenario(_protocol_scenario(), system)
    disp = injection_displacement(trace, system.finger)
    checks.append(("posture hold", disp == 0.0,
                   f"mean mark displacement {'none' if disp is None else f'{disp:g} m'}"))

    width = max(len(name) for name, _, _ in checks)
    ok = True
    for name, passed, detail in checks:
        ok &= passed
        print(f"[{'PASS' if passed else 'FAIL'}] {name:<{width}}  {detail}")
    print(f"{sum(p for _, p, _ in checks)}/{len(checks)} checks passed")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowhand",
        description="Flow-switched soft hand models: simulate, sweep, design, validate.")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a scenario file, emit per-step CSV")
    sim.add_argument("scenario", help="scenario JSON file")
    sim.add_argument("--config", help="system config JSON file")
    sim.add_argument("--out", help="CSV output path (default stdout)")
    sim.set_defaults(func=_cmd_simulate)

    swp = sub.add_parser("sweep", help="thresholds vs one config key")
    swp.add_argument("--param", required=True, help="config path, e.g. fcs.epsilon")
    swp.add_argument("--values", required=True,
                     help="comma-separated values, e.g. 1.5,2.6")
    swp.add_argument("--config", help="system config JSON file")
    swp.add_argument("--scenario", help="scenario to run per value")
    swp.add_argument("--out", help="CSV output path (default stdout)")
    swp.set_defaults(func=_cmd_sweep)

    des = sub.add_parser("design-search",
                         help="tune switch and orifice for target thresholds")
    des.add_argument("--q-ab", type=float, default=Q_AB_LPM,
                     help="target lever-flip flow [L/min]")
    des.add_argument("--q-bc", type=float, default=Q_BC_LPM,
                     help="target pinch-off flow [L/min]")
    des.add_argument("--q2", type=float, default=Q2_ONSET_LPM,
                     help="target injection-line onset [L/min]")
    des.add_argument("--config", help="system config JSON file to start from")
    des.add_argument("--out", help="write the tuned config JSON here")
    des.set_defaults(func=_cmd_design_search)

    tab = sub.add_parser("table1", help="prototype-table validation report")
    tab.add_argument("--out", help="report output path (default stdout)")
    tab.set_defaults(func=_cmd_table1)

    val = sub.add_parser("validate", help="self-check against the bench anchors")
    val.add_argument("--config", help="system config JSON file")
    val.set_defaults(func=_cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (SimulationError, InfeasibleDesignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
