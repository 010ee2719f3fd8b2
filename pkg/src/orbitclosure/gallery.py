"""Named fixture systems with committed expected reports."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from orbitclosure import flowdemo, symspace
from orbitclosure.actions import ActionSpec, flow_pap_syndetic, orbit_relation
from orbitclosure.checkers import analyze, is_r_closed, quotient_is_hausdorff
from orbitclosure.finspace import members, product, sierpinski
from orbitclosure.relation import hat

FLOAT_RTOL = 1e-9
FLOW_RADII = (0.3, 0.5, 0.7, 0.9)
DRIFT_RADII = (0.3, 0.5, 0.9)


def ex1_report() -> dict:
    """Sierpinski space under the trivial group."""
    X = sierpinski()
    A = ActionSpec(X, ((0, 1),), "finite")
    E = orbit_relation(A)
    R = hat(X, E)
    XX = product(X, X)
    closed_pairs = sorted(
        (sorted(divmod(i, X.n) for i in members(c)) for c in XX.closed_sets()),
        key=lambda c: (len(c), c),
    )
    flow = flow_pap_syndetic(A)
    return {
        "closed_sets": sorted((members(c) for c in X.closed_sets()), key=lambda c: (len(c), c)),
        "product_closed_sets": [[list(p) for p in c] for c in closed_pairs],
        "R": sorted(R.to_json()),
        "R_closed": is_r_closed(X, E).holds,
        "flow_pap": flow.holds,
        "flow_note": flow.note,
        "orbit_class_space_hausdorff": quotient_is_hausdorff(X, E).holds,
        "analysis": analyze(X, E).to_json(),
    }


def ex002_report() -> dict:
    sys = symspace.ex002()
    report = symspace.sym_analyze(sys).to_json()
    zero = symspace.RotPoint(0, 0)
    y = symspace.RotPoint(Fraction(1, 2), 0)
    in_bar, cert = symspace.sym_bar_membership(sys, zero, y)
    report["bar_pair"] = {
        "pair": [str(zero), str(y)],
        "in_closure_of_R": in_bar,
        "in_R": symspace.in_orbit_closure_relation(sys, zero, y),
        "certificate": cert.to_json(),
    }
    return report


def ex06_report() -> dict:
    sys = symspace.ex06()
    report = symspace.sym_analyze(sys).to_json()
    report["periodicity"] = symspace.sym_periodicity_profile(sys)
    report["truncations"] = {str(n): symspace.truncation_verdicts(n) for n in (5, 10, 20)}
    return report


def ex04_report(dt: float = 1e-3) -> dict:
    periods = {}
    for r in FLOW_RADII:
        measured = flowdemo.estimate_period(r, dt)
        exact = flowdemo.analytic_period(r)
        periods[str(r)] = {"measured": measured, "analytic": exact, "relative_error": abs(measured / exact - 1)}
    drifts = {str(r): flowdemo.period_drift(r, dt) for r in DRIFT_RADII}
    return {
        "label": flowdemo.ILLUSTRATION,
        "dt": dt,
        "periods": periods,
        "drift": drifts,
        "checks": {
            "period_within_0.5pct": all(p["relative_error"] < 5e-3 for p in periods.values()),
            "drift_below_1e-6": all(d < 1e-6 for d in drifts.values()),
        },
        "witness": flowdemo.r_witness_report(5),
    }


GALLERY: dict[str, Callable[[], dict]] = {
    "ex1": ex1_report,
    "ex002": ex002_report,
    "ex06": ex06_report,
    "ex04": ex04_report,
}

# Floating-point fields that depend on roundoff; only their tolerance checks are compared.
_ROUNDOFF_KEYS = {"drift", "half_period_distance_to_opposite", "return_distance", "relative_error"}


def expected_path(name: str) -> Path:
    return Path(str(resources.files("orbitclosure") / "data" / "expected" / f"{name}.json"))


def load_expected(name: str) -> dict:
    return json.loads(expected_path(name).read_text(encoding="utf-8"))


def normalize(report: dict) -> Any:
    """Round-trip through JSON so tuples and lists compare equal."""
    return json.loads(json.dumps(report, sort_keys=True))


def diff(expected: Any, actual: Any, path: str = "$") -> list[str]:
    if isinstance(expected, dict) and isinstance(actual, dict):
        out = []
        for key in sorted(set(expected) | set(actual)):
            if key not in actual:
                out.append(f"{path}.{key}: missing")
            elif key not in expected:
                out.append(f"{path}.{key}: unexpected")
            elif key not in _ROUNDOFF_KEYS:
                out += diff(expected[key], actual[key], f"{path}.{key}")
        return out
    if isinstance(expected, list) and isinstance(actual, list):
        if len(expected) != len(actual):
            return [f"{path}: length {len(actual)} != {len(expected)}"]
        out = []
        for i, (e, a) in enumerate(zip(expected, actual)):
            out += diff(e, a, f"{path}[{i}]")
        return out
    if isinstance(expected, float) and isinstance(actual, (int, float)) and not isinstance(actual, bool):
        if math.isclose(expected, actual, rel_tol=FLOAT_RTOL, abs_tol=1e-12):
            return []
        return [f"{path}: {actual!r} != {expected!r}"]
    if expected != actual or type(expected) is not type(actual):
        return [f"{path}: {actual!r} != {expected!r}"]
    return []


def run(name: str) -> tuple[dict, list[str]]:
    """Build a fixture report and diff it against the committed one."""
    report = normalize(GALLERY[name]())
    return report, diff(load_expected(name), report)


def write_expected(name: str) -> Path:
    path = expected_path(name)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(normalize(GALLERY[name]()), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path
