"""Numerical illustration on the closed unit disk.

The field ``v(x, y) = (y (1 - r^2), -x (1 - r^2))`` turns each circle of
radius ``r`` clockwise at angular speed ``1 - r^2``: the origin and the
boundary are fixed, every other orbit is periodic with period
``2 pi / (1 - r^2)``. The periods blow up towards the boundary, so pairs of
diametrically opposite points on circles of radius ``r_n -> 1`` lie in the
orbit-closure relation while their limit pair on the boundary does not.

Everything here is floating point; verdicts are labelled as illustrations.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import TextIO

from orbitclosure.errors import NonPeriodic, OutsideDisk

DISK_TOLERANCE = 1e-12
ILLUSTRATION = "numeric illustration"


@dataclass(frozen=True)
class PlanarPoint:
    x: float
    y: float

    def __post_init__(self) -> None:
        if self.x * self.x + self.y * self.y > 1.0 + DISK_TOLERANCE:
            raise OutsideDisk(f"({self.x}, {self.y}) lies outside the closed unit disk")

    @property
    def radius(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class Trajectory:
    times: list[float]
    points: list[tuple[float, float]]
    dt: float
    integrator: str = "rk4"

    @property
    def max_radius_drift(self) -> float:
        r0 = math.hypot(*self.points[0])
        return max(abs(math.hypot(x, y) - r0) for x, y in self.points)

    def write_csv(self, fh: TextIO) -> None:
        w = csv.writer(fh)
        w.writerow(["t", "x", "y"])
        for t, (x, y) in zip(self.times, self.points):
            w.writerow([repr(t), repr(x), repr(y)])


def eval_field(p: PlanarPoint) -> tuple[float, float]:
    s = 1.0 - (p.x * p.x + p.y * p.y)
    return p.y * s, -p.x * s


def _rk4_step(x: float, y: float, h: float) -> tuple[float, float]:
    s = 1.0 - (x * x + y * y)
    ax, ay = y * s, -x * s
    x2, y2 = x + 0.5 * h * ax, y + 0.5 * h * ay
    s = 1.0 - (x2 * x2 + y2 * y2)
    bx, by = y2 * s, -x2 * s
    x3, y3 = x + 0.5 * h * bx, y + 0.5 * h * by
    s = 1.0 - (x3 * x3 + y3 * y3)
    cx, cy = y3 * s, -x3 * s
    x4, y4 = x + h * cx, y + h * cy
    s = 1.0 - (x4 * x4 + y4 * y4)
    dx, dy = y4 * s, -x4 * s
    return x + h / 6.0 * (ax + 2 * bx + 2 * cx + dx), y + h / 6.0 * (ay + 2 * by + 2 * cy + dy)


def integrate(p0: PlanarPoint, dt: float, steps: int) -> Trajectory:
    """Fixed-step classical Runge-Kutta trajectory, ``steps + 1`` samples."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    x, y = p0.x, p0.y
    times = [0.0]
    points = [(x, y)]
    for k in range(1, steps + 1):
        x, y = _rk4_step(x, y, dt)
        times.append(k * dt)
        points.append((x, y))
    return Trajectory(times, points, dt)


def flow_to(p0: PlanarPoint, t: float, dt: float) -> tuple[float, float]:
    """Position at time ``t``, using the largest step not above ``dt`` that divides ``t``."""
    steps = max(1, math.ceil(t / dt))
    h = t / steps
    x, y = p0.x, p0.y
    for _ in range(steps):
        x, y = _rk4_step(x, y, h)
    return x, y


def analytic_period(r: float) -> float:
    return 2.0 * math.pi / (1.0 - r * r)


def _first_return(r: float, dt: float, max_time: float) -> float:
    x, y = r, 0.0
    swept = 0.0
    t = 0.0
    while t < max_time:
        nx, ny = _rk4_step(x, y, dt)
        # Clockwise rotation: accumulate the (positive) angle turned this step.
        dtheta = math.atan2(x * ny - y * nx, x * nx + y * ny)
        step = -dtheta
        if swept + step >= 2.0 * math.pi:
            return t + dt * (2.0 * math.pi - swept) / step
        swept += step
        x, y = nx, ny
        t += dt
    raise NonPeriodic(f"no return to the start ray within t = {max_time}")


def estimate_period(r: float, dt: float = 1e-3, max_time: float = 1e4) -> float:
    """First return time to the start ray, Richardson-refined over ``dt`` and ``dt / 2``."""
    if r > 1.0 + DISK_TOLERANCE:
        raise OutsideDisk(f"radius {r} outside the disk")
    if not 0.0 < r < 1.0:
        raise NonPeriodic(f"radius {r} is a fixed point")
    coarse = _first_return(r, dt, max_time)
    fine = _first_return(r, dt / 2, max_time)
    return fine + (fine - coarse) / 15.0


def period_drift(r: float, dt: float) -> float:
    """Largest radius deviation over one analytic period."""
    steps = round(analytic_period(r) / dt)
    return integrate(PlanarPoint(r, 0.0), dt, steps).max_radius_drift


def witness_radius(n: int) -> float:
    return 1.0 - 1.0 / math.sqrt(math.pi * n)


def r_witness_report(n_max: int, dt: float = 1e-2, eps: float = 1e-6) -> dict:
    """Pairs of opposite points on shrinking-gap circles that lie in the
    orbit-closure relation, and the fixed boundary pair they converge to."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows = []
    for n in range(1, n_max + 1):
        r = witness_radius(n)
        start = PlanarPoint(r, 0.0)
        period = estimate_period(r, dt)
        hx, hy = flow_to(start, period / 2, dt)
        ex, ey = flow_to(start, period, dt)
        rows.append(
            {
                "n": n,
                "r": r,
                "period": period,
                "rotation_per_unit_time": (1.0 - r * r) / (2.0 * math.pi),
                "half_period_distance_to_opposite": math.hypot(hx + r, hy),
                "return_distance": math.hypot(ex - r, ey),
                "opposite_pair_in_R": math.hypot(hx + r, hy) < eps,
            }
        )
    bx, by = flow_to(PlanarPoint(1.0, 0.0), 100.0, dt)
    boundary_fixed = eval_field(PlanarPoint(1.0, 0.0)) == (0.0, 0.0) and (bx, by) == (1.0, 0.0)
    all_in = all(row["opposite_pair_in_R"] for row in rows)
    return {
        "label": ILLUSTRATION,
        "pairs": rows,
        "limit_pair": [[1.0, 0.0], [-1.0, 0.0]],
        "boundary_fixed": boundary_fixed,
        "limit_pair_in_R": not boundary_fixed,
        "verdict": f"R not closed ({ILLUSTRATION})" if all_in and boundary_fixed else f"inconclusive ({ILLUSTRATION})",
    }
