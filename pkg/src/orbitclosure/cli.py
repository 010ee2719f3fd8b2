"""Command line front end.

Exit codes: 0 success, 1 battery violation or gallery drift, 2 input error.
A false verdict is a measurement, never an error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from orbitclosure import flowdemo, gallery
from orbitclosure.actions import action_from_json, flow_pap_syndetic, orbit_relation, periodicity_profile
from orbitclosure.checkers import analyze, exhaustive_instances, random_instances, theorem_battery
from orbitclosure.errors import OrbitClosureError
from orbitclosure.finspace import MAX_ENUMERATION_POINTS, space_from_json
from orbitclosure.relation import relation_from_json

RANDOM_MAX_POINTS = 8
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _load_check_input(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("top level: expected an object")
    if "space" not in doc:
        raise InputError("missing key 'space'")
    out = {}
    try:
        out["space"] = space_from_json(doc["space"])
    except KeyError as exc:
        raise InputError(f"space: missing key {exc}") from exc
    except (OrbitClosureError, ValueError, TypeError) as exc:
        raise InputError(f"space: {type(exc).__name__}: {exc}") from exc
    keys = [k for k in ("relation", "partition", "generators") if k in doc]
    if len(keys) != 1:
        raise InputError("give exactly one of 'relation', 'partition' or 'generators'")
    key = keys[0]
    try:
        if key == "generators":
            out["action"] = action_from_json(out["space"], doc)
            out["relation"] = orbit_relation(out["action"])
        else:
            out["relation"] = relation_from_json(out["space"].n, {key: doc[key]})
    except (OrbitClosureError, ValueError, TypeError, KeyError) as exc:
        raise InputError(f"{key}: {type(exc).__name__}: {exc}") from exc
    return out


def cmd_check(args: argparse.Namespace) -> int:
    inp = _load_check_input(args.input)
    report = analyze(inp["space"], inp["relation"]).to_json()
    doc = {"report": report}
    if "action" in inp:
        A = inp["action"]
        flow = flow_pap_syndetic(A)
        doc["flow"] = {
            "flow_pap": flow.holds,
            "note": flow.note,
            "gaps": [{"point": c.point, "gap": c.gap, "compact_set": list(c.compact_set)} for c in flow.certificates],
        }
        if len(A.generators) == 1:
            doc["flow"]["periodicity"] = periodicity_profile(A).to_json()
    if args.format == "json":
        print(_dump(doc))
    else:
        for k, v in report["verdicts"].items():
            print(f"{k}: {v}")
        if "flow" in doc:
            print(f"flow_pap: {doc['flow']['flow_pap']}")
        for w in report["witnesses"]:
            print(f"witness {w['kind']} {w['points']}: {w['explanation']}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.random is None:
        if not 1 <= args.points <= MAX_ENUMERATION_POINTS:
            raise InputError(f"--points must be in 1..{MAX_ENUMERATION_POINTS} for exhaustive enumeration")
        instances = list(exhaustive_instances(args.points))
        mode = {"mode": "exhaustive", "points": args.points}
    else:
        if not 1 <= args.points <= RANDOM_MAX_POINTS:
            raise InputError(f"--points must be in 1..{RANDOM_MAX_POINTS} for random instances")
        if args.random < 0:
            raise InputError("--random must be nonnegative")
        instances = list(random_instances(args.seed, args.random, args.points))
        mode = {"mode": "random", "max_points": args.points, "seed": args.seed}
    violations = theorem_battery(instances, jobs=args.jobs)
    noun = "instance" if len(instances) == 1 else "instances"
    summary = f"{len(instances)} {noun}, {len(violations)} violations"
    if args.format == "json":
        print(_dump({**mode, "instances": len(instances), "violations": [v.to_json() for v in violations], "summary": summary}))
    else:
        print(summary)
        for v in violations:
            print(f"instance {v.instance}: {v.check}: {v.detail}")
    return EXIT_OK if not violations else EXIT_FAIL


def cmd_gallery(args: argparse.Namespace) -> int:
    if args.name not in gallery.GALLERY:
        raise InputError(f"unknown gallery name {args.name!r}; choose from {', '.join(gallery.GALLERY)}")
    if args.update:
        path = gallery.write_expected(args.name)
        print(f"wrote {path}")
        return EXIT_OK
    report, drift = gallery.run(args.name)
    if args.format == "json":
        print(_dump({"name": args.name, "report": report, "drift": drift}))
    else:
        print(f"{args.name}: {'matches committed report' if not drift else 'DRIFT'}")
        for line in drift:
            print(f"  {line}")
    return EXIT_OK if not drift else EXIT_FAIL


def cmd_flow_demo(args: argparse.Namespace) -> int:
    if args.dt <= 0:
        raise InputError("--dt must be positive")
    periods = []
    ok = True
    for r in args.radius:
        try:
            measured = flowdemo.estimate_period(r, args.dt)
        except OrbitClosureError as exc:
            raise InputError(f"--radius {r}: {exc}") from exc
        exact = flowdemo.analytic_period(r)
        rel = abs(measured / exact - 1)
        drift = flowdemo.period_drift(r, args.dt)
        row_ok = rel <= args.tolerance_period and drift < args.tolerance_drift
        ok &= row_ok
        periods.append(
            {"r": r, "period": measured, "analytic": exact, "relative_error": rel, "radius_drift": drift, "within_tolerance": row_ok}
        )
    doc = {
        "label": flowdemo.ILLUSTRATION,
        "dt": args.dt,
        "tolerance_period": args.tolerance_period,
        "tolerance_drift": args.tolerance_drift,
        "periods": periods,
        "witness": flowdemo.r_witness_report(args.n_max),
    }
    if args.csv:
        r0 = args.radius[0]
        steps = round(flowdemo.analytic_period(r0) / args.dt)
        traj = flowdemo.integrate(flowdemo.PlanarPoint(r0, 0.0), args.dt, steps)
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            traj.write_csv(fh)
    if args.format == "json":
        print(_dump(doc))
    else:
        for row in periods:
            print(
                f"r={row['r']}: period {row['period']:.6f} (analytic {row['analytic']:.6f}, "
                f"rel err {row['relative_error']:.2e}), radius drift {row['radius_drift']:.2e}"
            )
        print(doc["witness"]["verdict"])
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitclosure", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="analyze a space with a relation, partition or action")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="run the lemma battery exhaustively or on random instances")
    p.add_argument("--points", type=int, default=3)
    p.add_argument("--random", type=int, default=None, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gallery", help="rebuild a named fixture and diff it against the committed report")
    p.add_argument("name")
    p.add_argument("--update", action="store_true", help="overwrite the committed report")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("flow-demo", help="numerical disk-flow illustration")
    p.add_argument("--radius", type=float, action="append", default=None)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--tolerance-period", type=float, default=5e-3)
    p.add_argument("--tolerance-drift", type=float, default=1e-6)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_flow_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "flow-demo" and args.radius is None:
        args.radius = list(gallery.FLOW_RADII)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
