"""Command-line front end: ``mems-inductor <subcommand> ...``.

Interface units are um, um^2, nH, V and kHz; everything is converted to SI
at this boundary. Results go to stdout (or ``--out``) as CSV or JSON.

Exit codes: 0 success, 1 validation/usage error or failed verification,
2 internal error.
"""

from __future__ import annotations

import argparse
import re
import sys
import traceback

import numpy as np

from . import reports
from .cantilever import (Plane, bending_stiffness, frequency_response, modal_frequencies,
                         pull_in_voltage, static_deflection)
from .coil import (CoilGeometry, CoreMaterial, quality_factor, solenoid_inductance,
                   wire_resistance)
from .config import beam_from_mapping, catalog_from_config, load_config
from .constants import KHZ, NH, UM, UM2
from .errors import ValidationError
from .output import FORMATS, UsageError, emit
from .sweep import SweepSpec, run_sweep
from .switching import (SwitchWord, build_network, effective_inductance, enumerate_steps,
                        parse_switch_word, total_inductance)

SWITCH_GRAMMAR = """\
switch word grammar: one character per coil, coil 1 first
  S  series-select   (parallel switch open, PSSW up)
  P  parallel-select (parallel switch closed, PSSW down)
  O  disconnected    (both switches open)
parallel-selected coils must be consecutive; e.g. SPPPP = 1 series coil + 4-coil bank
"""

_UNIT_SCALE = {"h": 1.0, "mh": 1e-3, "uh": 1e-6, "µh": 1e-6, "nh": 1e-9, "ph": 1e-12}


def parse_inductance(text: str) -> float:
    """``"1nH"``, ``"2.5e-9 H"``, ``"0.5uH"`` -> henry; a bare number is nH."""
    m = re.fullmatch(r"\s*([-+0-9.eE]+)\s*([a-zA-Zµ]*)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse inductance {text!r}")
    unit = m.group(2).lower() or "nh"
    if unit not in _UNIT_SCALE:
        raise argparse.ArgumentTypeError(f"unknown inductance unit {m.group(2)!r}")
    try:
        value = float(m.group(1)) * _UNIT_SCALE[unit]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse inductance {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("inductance must be positive")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="YAML/JSON configuration file (materials, beam, sweep)")
    p.add_argument("--out", help="write results to this file instead of stdout")
    p.add_argument("--format", choices=FORMATS, default="csv", help="output format (default: csv)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mems-inductor", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coil", help="solenoid inductance (and optional resistance / Q)")
    _add_common(p)
    p.add_argument("--turns", type=int, required=True)
    p.add_argument("--area-um2", type=float, required=True, help="winding cross-section")
    p.add_argument("--length-um", type=float, required=True)
    core = p.add_mutually_exclusive_group()
    core.add_argument("--mu-r", type=float, help="relative permeability of the core")
    core.add_argument("--material", help="core material name from the catalog (default: air)")
    p.add_argument("--wire-area-um2", type=float, default=1.0)
    p.add_argument("--perimeter-um", type=float, help="core perimeter; enables resistance")
    p.add_argument("--conductor", default="Cu")
    p.add_argument("--frequency-hz", type=float, help="enables quality factor (needs --perimeter-um)")

    p = sub.add_parser("steps", help="enumerate every inductance step of an n-coil bank")
    _add_common(p)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--unit-l", type=parse_inductance, default=1e-9, help="unit coil L (default 1nH)")

    p = sub.add_parser("switch", help="evaluate one switch word",
                       epilog=SWITCH_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_common(p)
    p.add_argument("--word", required=True, help="e.g. SPPPP (see grammar below)")
    p.add_argument("--unit-l", type=parse_inductance, default=1e-9, help="unit coil L (default 1nH)")

    p = sub.add_parser("beam", help="cantilever switch modes, pull-in, deflection, response")
    _add_common(p)
    for key, help_ in (("length-um", "beam length"), ("width-um", "in-plane width"),
                       ("thickness-um", "out-of-plane thickness"), ("gap-um", "electrode gap"),
                       ("electrode-area-um2", "electrode overlap area"),
                       ("youngs-modulus-gpa", "Young's modulus"), ("density", "kg/m^3")):
        p.add_argument(f"--{key}", type=float, help=f"{help_} (overrides config)")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--voltage", type=float, help="static deflection at this DC voltage")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--bias", type=float, help="frequency response about this DC bias")
    p.add_argument("--freq-khz", nargs=3, type=float, metavar=("START", "STOP", "NUM"),
                   help="frequency grid for --bias (default: 0.5..1.5 x resonance, 201 points)")
    p.add_argument("--q", type=float, default=10.0, help="mechanical quality factor")

    p = sub.add_parser("sweep", help="run a parameter sweep from the config's 'sweep' section")
    _add_common(p)
    p.add_argument("--subject", choices=("coil", "beam", "steps"))
    p.add_argument("--grid", action="append", default=[], metavar="NAME=V1,V2,...")
    p.add_argument("--fixed", action="append", default=[], metavar="NAME=VALUE")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("verify", help="recompute the published tables and compare")
    p.add_argument("--data-dir", help="directory holding alternative reference table CSVs")
    p.add_argument("--report", help="write the full comparison report (format from extension)")
    p.add_argument("--format", choices=FORMATS, default="csv", help="stdout listing format")
    return parser


def _scalar(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def _cmd_coil(args, config) -> list[dict]:
    catalog = catalog_from_config(config)
    if args.mu_r is not None:
        core = CoreMaterial("custom", args.mu_r)
    else:
        core = catalog.lookup(args.material or "air")
    geom = CoilGeometry(args.turns, args.area_um2 * UM2, args.length_um * UM,
                        wire_area=args.wire_area_um2 * UM2)
    L = solenoid_inductance(geom, core)
    row = {"turns": args.turns, "area_um2": args.area_um2, "length_um": args.length_um,
           "mu_r": core.mu_r, "inductance_nh": L / NH}
    if args.perimeter_um is not None:
        R = wire_resistance(geom, args.perimeter_um * UM, catalog.lookup(args.conductor))
        row["resistance_ohm"] = R
        if args.frequency_hz is not None:
            row["quality_factor"] = quality_factor(L, R, args.frequency_hz)
    elif args.frequency_hz is not None:
        raise UsageError("--frequency-hz needs --perimeter-um")
    return [row]


def _cmd_steps(args, config) -> list[dict]:
    table = enumerate_steps(args.n, args.unit_l)
    return [{"step": i, "series": s.config.series_count, "parallel": s.config.parallel_count,
             "factor": s.factor, "inductance_nh": s.factor * args.unit_l / NH}
            for i, s in enumerate(table, 1)]


def _cmd_switch(args, config) -> list[dict]:
    config_ = parse_switch_word(SwitchWord.from_text(args.word))
    for note in config_.notes:
        print(f"note: {note}", file=sys.stderr)
    closed_form = total_inductance(config_, args.unit_l)
    solved = effective_inductance(build_network(config_, args.unit_l))
    return [{"word": args.word, "series": config_.series_count,
             "parallel": config_.parallel_count, "factor": config_.factor(),
             "inductance_nh": closed_form / NH, "network_inductance_nh": solved / NH}]


def _beam_from_args(args, config):
    values = dict((config or {}).get("beam") or {})
    for key in ("length_um", "width_um", "thickness_um", "gap_um", "electrode_area_um2",
                "youngs_modulus_gpa", "density"):
        if getattr(args, key) is not None:
            values[key] = getattr(args, key)
    return beam_from_mapping(values)


def _cmd_beam(args, config) -> list[dict]:
    beam = _beam_from_args(args, config)
    if args.bias is not None:
        if args.freq_khz:
            start, stop, num = args.freq_khz
            freqs = np.linspace(start, stop, int(num)) * KHZ
        else:
            f0 = frequency_response(beam, args.bias, [1.0], args.q, args.side).resonance
            freqs = np.linspace(0.5 * f0, 1.5 * f0, 201)
        resp = frequency_response(beam, args.bias, freqs, args.q, args.side)
        return [{"frequency_khz": f / KHZ, "amplitude_um_per_v": a / UM,
                 "resonance_khz": resp.resonance / KHZ} for f, a in resp.rows()]
    row = {"stiffness_n_per_m": bending_stiffness(beam, Plane.IN_PLANE),
           "pull_in_v": pull_in_voltage(beam, args.side)}
    for mode in modal_frequencies(beam, args.max_order):
        plane = "inplane" if mode.plane is Plane.IN_PLANE else "outofplane"
        row[f"f_{plane}{mode.order}_khz"] = mode.frequency / KHZ
    if args.voltage is not None:
        res = static_deflection(beam, args.voltage, args.side)
        row.update(voltage=args.voltage, displacement_um=res.tip_displacement / UM,
                   stable=res.stable)
    return [row]


def _cmd_sweep(args, config) -> list[dict]:
    data = dict((config or {}).get("sweep") or {})
    if args.subject:
        data["subject"] = args.subject
    grid = dict(data.get("grid") or {})
    fixed = dict(data.get("fixed") or {})
    for item in args.grid:
        name, _, values = item.partition("=")
        if not values:
            raise UsageError(f"--grid expects NAME=V1,V2,..., got {item!r}")
        grid[name] = [_scalar(v) for v in values.split(",")]
    for item in args.fixed:
        name, _, value = item.partition("=")
        if not value:
            raise UsageError(f"--fixed expects NAME=VALUE, got {item!r}")
        fixed[name] = _scalar(value)
    if data.get("subject") == "beam" and config and config.get("beam"):
        for key, value in config["beam"].items():
            if key not in grid:
                fixed.setdefault(key, value)
    for key in grid:
        fixed.pop(key, None)
    data["grid"], data["fixed"] = grid, fixed
    spec = SweepSpec.from_mapping(data)
    return run_sweep(spec, catalog_from_config(config), max_workers=args.workers)


def _cmd_verify(args) -> int:
    all_reports = reports.run_all(args.data_dir)
    rows = [row for rep in all_reports for row in rep.as_dicts()]
    emit(rows, args.format)
    failed = [r for rep in all_reports for r in rep.mismatches]
    for rep in all_reports:
        for r in rep.flagged:
            print(f"flagged: [{rep.title}] {r.description}: {r.note}", file=sys.stderr)
    if args.report:
        fmt = "json" if args.report.lower().endswith(".json") else "csv"
        emit(rows, fmt, args.report)
    for r in failed:
        print(f"MISMATCH: {r.description}: computed {r.computed!r}, published {r.reference!r}",
              file=sys.stderr)
    print(f"verify: {len(rows)} rows, {len(failed)} mismatches, "
          f"{sum(len(rep.flagged) for rep in all_reports)} flagged", file=sys.stderr)
    return 1 if failed else 0


_COMMANDS = {"coil": _cmd_coil, "steps": _cmd_steps, "switch": _cmd_switch,
             "beam": _cmd_beam, "sweep": _cmd_sweep}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        config = load_config(args.config) if args.config else None
        rows = _COMMANDS[args.command](args, config)
        emit(rows, args.format, args.out)
        return 0
    except (ValidationError, KeyError, OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
