"""Command line entry point: ``truncbraid <group> <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

import numpy as np

from . import geometry as geo
from .cosets import DEFAULT_CAP
from .render import render
from .report import FAIL, PASS, Config, ConfigError, center_case, order_case, verify_all
from .tiling import EXCEPTIONAL_PAIRS, synthesize_tiling

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

DEFAULT_BASE_POINTS = ((0.6, 0.8j), (0.8j, -0.6))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _case_exit(*cases) -> int:
    return EXIT_FAIL if any(c.status == FAIL for c in cases) else EXIT_PASS


def cmd_coxeter_verify(args) -> int:
    case = order_case(args.n, args.d, args.cap)
    _emit(asdict(case))
    return _case_exit(case)


def cmd_coxeter_center(args) -> int:
    case = center_case(args.d, args.cap)
    _emit(asdict(case))
    return _case_exit(case)


def cmd_coxeter_table(args) -> int:
    cases = [order_case(n, d, args.cap) for n, d in EXCEPTIONAL_PAIRS]
    if args.format in ("text", "both"):
        print(f"{'n':>3} {'d':>3} {'formula':>10} {'enumerated':>11}  status")
        for (n, d), c in zip(EXCEPTIONAL_PAIRS, cases):
            print(f"{n:>3} {d:>3} {c.expected!s:>10} {c.computed!s:>11}  {c.status}")
    if args.format in ("json", "both"):
        _emit([asdict(c) for c in cases])
    return _case_exit(*cases)


def cmd_tiling_synthesize(args) -> int:
    t = synthesize_tiling(args.n, args.d, args.cap)
    summary = {"n": t.n, "d": t.d, "geometry": t.geometry.value,
               "V": t.V, "E": t.E, "F": t.F, "darts": t.dart_count}
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(t.to_json(), fh)
            fh.write("\n")
        _emit(summary)
    else:
        _emit(t.to_json())
    return EXIT_PASS


def cmd_tiling_render(args) -> int:
    doc = render(args.n, args.d, args.depth)
    doc.write(args.out)
    _emit({"n": args.n, "d": args.d, "model": doc.model, "polygons": doc.polygon_count,
           "out": args.out})
    return EXIT_PASS


def cmd_geom_meridian(args) -> int:
    pts, winding = geo.meridian_loop(args.steps)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(geo.discriminant_svg([geo.discriminant(p) for p in pts]))
    _emit({"steps": args.steps, "winding": winding})
    return EXIT_PASS if winding == 1 else EXIT_FAIL


def cmd_geom_orbit_winding(args) -> int:
    p = DEFAULT_BASE_POINTS[0]
    w = geo.orbit_winding(p, args.samples)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(geo.orbit_polyline(p, args.samples).to_csv())
    _emit({"samples": args.samples, "base_point": [str(complex(z)) for z in p], "winding": w})
    return EXIT_PASS if w == 6 else EXIT_FAIL


def cmd_geom_linking(args) -> int:
    if args.seed is None:
        p, q = DEFAULT_BASE_POINTS
    else:
        rng = np.random.default_rng(args.seed)
        p, q = tuple(geo.random_generic_point(rng)), tuple(geo.random_generic_point(rng))
    value, nearest = geo.linking_number(geo.orbit_polyline(p, args.samples),
                                        geo.orbit_polyline(q, args.samples))
    _emit({"samples": args.samples, "value": value, "nearest": nearest})
    return EXIT_PASS if nearest == 6 else EXIT_FAIL


def cmd_geom_monodromy(args) -> int:
    perm = geo.meridian_monodromy(args.steps)
    orbit = geo.orbit_monodromy(DEFAULT_BASE_POINTS[0], max(args.steps, 64))
    ok = geo.is_transposition(perm) and orbit == (0, 1, 2)
    _emit({"steps": args.steps, "meridian": list(perm),
           "meridian_is_transposition": geo.is_transposition(perm), "orbit": list(orbit)})
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_report_all(args) -> int:
    try:
        cfg = Config.load(args.config) if args.config else Config()
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = verify_all(cfg)
    text = report.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for c in report.cases:
        print(f"{c.status:<12} {c.id:<20} expected={c.expected} computed={c.computed}",
              file=sys.stderr)
    print(f"overall: {report.overall}", file=sys.stderr)
    return EXIT_PASS if report.overall == PASS else EXIT_FAIL


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="truncbraid", description=__doc__)
    groups = parser.add_subparsers(dest="group", required=True)

    cox = groups.add_parser("coxeter", help="orders of truncated braid groups").add_subparsers(
        dest="command", required=True)
    p = cox.add_parser("verify", help="|B_n(d)| by enumeration against the formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_coxeter_verify)
    p = cox.add_parser("center-order", help="order of the full twist in B_3(d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_coxeter_center)
    p = cox.add_parser("table", help="the five exceptional orders")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "json", "both"), default="both")
    p.set_defaults(func=cmd_coxeter_table)

    til = groups.add_parser("tiling", help="regular tilings").add_subparsers(
        dest="command", required=True)
    p = til.add_parser("synthesize", help="combinatorial spherical tiling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_tiling_synthesize)
    p = til.add_parser("render", help="SVG picture of a tiling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--out", required=True, metavar="PATH.svg")
    p.set_defaults(func=cmd_tiling_render)

    geom = groups.add_parser("geom", help="trefoil complement numerics").add_subparsers(
        dest="command", required=True)
    p = geom.add_parser("meridian", help="discriminant winding of the meridian loop")
    p.add_argument("--steps", type=int, default=256)
    p.add_argument("--svg", metavar="PATH", help="plot the discriminant curve")
    p.set_defaults(func=cmd_geom_meridian)
    p = geom.add_parser("orbit-winding", help="discriminant winding along a circle orbit")
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--csv", metavar="PATH", help="write the projected orbit as CSV")
    p.set_defaults(func=cmd_geom_orbit_winding)
    p = geom.add_parser("linking", help="linking number of two regular orbits")
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--seed", type=int, help="draw random generic base points")
    p.set_defaults(func=cmd_geom_linking)
    p = geom.add_parser("monodromy", help="root monodromy of the meridian and an orbit")
    p.add_argument("--steps", type=int, default=256)
    p.set_defaults(func=cmd_geom_monodromy)

    rep = groups.add_parser("report", help="full verification report").add_subparsers(
        dest="command", required=True)
    p = rep.add_parser("all")
    p.add_argument("--config", metavar="PATH")
    p.add_argument("--out", metavar="PATH.json")
    p.set_defaults(func=cmd_report_all)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
