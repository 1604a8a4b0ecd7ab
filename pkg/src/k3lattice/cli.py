"""Command-line front end with stable machine-readable reports.

Every subcommand emits a Report envelope {schema_version, command,
inputs, result} in json, csv, or table form.  JSON uses sorted keys and
integers only, so parse-and-reserialize is byte-identical; csv and
table are flat key/value renderings of the same payload.  Exit codes:
0 success, 1 failed verification check, 2 invalid input, 3 overflow.
"""

from __future__ import annotations

import argparse
import csv
import enum
import json
import sys
from dataclasses import asdict, is_dataclass

from .lattice import DivClass, PolarizedLattice, cone_data, elliptic_pencil_classes, minus_two_classes
from .cohomology import cohomology, positivity
from .clifford import clifford_index
from .acm import classify_acm_initialized, is_acm, quartic_acm_predicate, quartic_splitting_types
from .lm import (
    PencilMarker,
    dm_candidates,
    destabilizer_search,
    gonality_pencil_classes,
    lm_invariants,
    stability_classify,
)
from .verify import ALL_CHECKS, SweepConfig, run_sweep

SCHEMA_VERSION = "1.0.0"


def _jsonable(obj):
    if isinstance(obj, DivClass):
        return [obj.n, obj.m]
    if isinstance(obj, enum.Enum):
        return obj.value
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}{k}.")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2))
        out.write("\n")
        return
    pairs = list(_flatten(report))
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in pairs:
            writer.writerow([key, json.dumps(value)])
        return
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        out.write(f"{key:<{width}}  {json.dumps(value)}\n")


def _parse_class(text: str) -> DivClass:
    try:
        n, m = text.split(",")
        return DivClass(int(n), int(m))
    except ValueError:
        raise ValueError(f"class must be 'N,M' with integer N, M; got {text!r}")


def _report(command, inputs, result) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": _jsonable(inputs),
        "result": _jsonable(result),
    }


def _cmd_lattice(args):
    lat = PolarizedLattice(args.g, args.d)
    cone = cone_data(lat)
    mt = minus_two_classes(lat)
    result = {
        "gram": [list(row) for row in lat.gram()],
        "minus_two_classes": list(mt) if mt else None,
        "elliptic_pencils": list(elliptic_pencil_classes(lat)),
        "cone": {
            "eff_rays": list(cone.eff_rays),
            "nef_rays": list(cone.nef_rays),
            "isotropic_primitives": list(cone.isotropic_primitives),
        },
    }
    return _report("lattice", {"g": args.g, "d": args.d}, result), 0


def _cmd_coh(args):
    lat = PolarizedLattice(args.g, args.d)
    c = _parse_class(args.cls)
    result = {
        "class": c,
        "cohomology": cohomology(lat, c),
        "positivity": positivity(lat, c),
    }
    inputs = {"g": args.g, "d": args.d, "class": c}
    return _report("coh", inputs, result), 0


def _cmd_clifford(args):
    lat = PolarizedLattice(args.g, args.d)
    return _report("clifford", {"g": args.g, "d": args.d}, clifford_index(lat)), 0


def _cmd_acm(args):
    lat = PolarizedLattice(args.g, args.d)
    inputs = {"g": args.g, "d": args.d}
    if args.classify:
        inputs["radius"] = args.radius
        result = {"classes": classify_acm_initialized(lat, args.radius)}
    else:
        c = _parse_class(args.cls)
        inputs["class"] = c
        result = is_acm(lat, c)
    return _report("acm", inputs, result), 0


def _cmd_quartic_acm(args):
    result = {
        "acm_initialized": quartic_acm_predicate(
            args.d2, args.cd, args.has_d_minus_c, args.has_2c_minus_d
        )
    }
    inputs = {
        "d2": args.d2,
        "cd": args.cd,
        "has_d_minus_c": args.has_d_minus_c,
        "has_2c_minus_d": args.has_2c_minus_d,
    }
    return _report("quartic-acm", inputs, result), 0


def _cmd_quartic_splitting(args):
    return _report("quartic-splitting", {}, {"types": quartic_splitting_types()}), 0


def _cmd_lm(args):
    lat = PolarizedLattice(args.g, args.d)
    marker = PencilMarker(args.marker)
    result = {
        "invariants": lm_invariants(lat),
        "dm_candidates": dm_candidates(lat),
        "stability": stability_classify(lat, marker),
        "destabilizer_search": destabilizer_search(lat),
        "gonality_pencils": gonality_pencil_classes(lat),
    }
    inputs = {"g": args.g, "d": args.d, "marker": marker}
    return _report("lm", inputs, result), 0


def _cmd_verify(args):
    checks = frozenset(args.checks.split(",")) if args.checks else frozenset(ALL_CHECKS)
    cfg = SweepConfig(args.g_max, args.radius, checks, args.jobs)
    results = run_sweep(cfg)
    failed = sum(not r.passed for r in results)
    # parallelism is an execution knob, not an input: reports are
    # byte-identical at every jobs setting
    inputs = {"g_max": args.g_max, "radius": args.radius, "checks": sorted(checks)}
    result = {
        "results": [
            {
                "check_id": r.check_id,
                "g": r.g,
                "d": r.d,
                "passed": r.passed,
                "certificate": r.certificate,
            }
            for r in results
        ],
        "failed": failed,
        "total": len(results),
    }
    return _report("verify", inputs, result), (1 if failed else 0)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3lattice",
        description="Exact computations on rank-2 polarized K3 Picard lattices.",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv", "table"),
        default=None,
        help="output format (default: table on a terminal, json when piped)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gd(p):
        p.add_argument("--g", type=int, required=True, help="sectional genus")
        p.add_argument("--d", type=int, required=True, help="degree H.F")

    p = sub.add_parser("lattice", help="Gram matrix, cones, special classes")
    add_gd(p)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("coh", help="cohomology and positivity of a class")
    add_gd(p)
    p.add_argument("--class", dest="cls", required=True, metavar="N,M",
                   help="class nH+mF; use --class=-1,2 for negative n")
    p.set_defaults(func=_cmd_coh)

    p = sub.add_parser("clifford", help="Clifford index report")
    add_gd(p)
    p.set_defaults(func=_cmd_clifford)

    p = sub.add_parser("acm", help="ACM verdict of a class, or full classification")
    add_gd(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--class", dest="cls", metavar="N,M")
    group.add_argument("--classify", action="store_true")
    p.add_argument("--radius", type=int, default=20, help="classification box radius")
    p.set_defaults(func=_cmd_acm)

    p = sub.add_parser("quartic-acm", help="numeric ACM-initialized test on a quartic")
    p.add_argument("--d2", type=int, required=True, help="self-intersection D^2")
    p.add_argument("--cd", type=int, required=True, help="degree C.D")
    p.add_argument("--has-d-minus-c", action="store_true")
    p.add_argument("--has-2c-minus-d", action="store_true")
    p.set_defaults(func=_cmd_quartic_acm)

    p = sub.add_parser("quartic-splitting", help="splitting types on a quartic")
    p.set_defaults(func=_cmd_quartic_splitting)

    p = sub.add_parser("lm", help="Lazarsfeld-Mukai invariants and stability")
    add_gd(p)
    p.add_argument("--marker", choices=("f", "h-f", "other"), default="f",
                   help="which pencil cuts the gonality pencil on the curve")
    p.set_defaults(func=_cmd_lm)

    p = sub.add_parser("verify", help="classification sweep over (g, d)")
    p.add_argument("--g-max", type=int, default=10)
    p.add_argument("--radius", type=int, default=10)
    p.add_argument("--checks", default=None, help="comma-separated check ids")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (0 = auto)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("table" if sys.stdout.isatty() else "json")
    try:
        report, code = args.func(args)
    except OverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    _emit(report, fmt, sys.stdout)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
