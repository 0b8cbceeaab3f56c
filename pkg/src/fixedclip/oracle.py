"""Brute-force boolean oracle by pointwise membership sampling.

Shares no code with classification or tracing: coordinates are scaled to
integers once per check, and the winding number is accumulated from quadrant
transitions rather than ray crossings.
"""
import random
from dataclasses import dataclass, field
from math import lcm
from typing import List, Sequence, Tuple

from gmpy2 import mpq

from .geometry import Point
from .model import Polygon, Rule


class OnBoundary(Exception):
    pass


@dataclass
class SamplePlan:
    seed: int = 0
    count: int = 1000
    inflate: mpq = mpq(1, 10)
    grid: int = 1 << 12
    max_attempts: int = 50


@dataclass
class Report:
    samples: int
    witnesses: List[Tuple[Point, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses


def _rings_of(shape) -> Tuple[List[List[Point]], Rule, bool]:
    """(rings, rule, complemented) for a Polygon, a ResultRegion, or raw rings."""
    if isinstance(shape, Polygon):
        return [c.points() for c in shape.contours], shape.rule, shape.complement
    if hasattr(shape, "rings"):
        return shape.rings(), shape.rule, False
    return [list(r) for r in shape], Rule.NONZERO, False


def _quadrant(dx, dy) -> int:
    if dx > 0 and dy >= 0:
        return 0
    if dx <= 0 and dy > 0:
        return 1
    if dx < 0 and dy <= 0:
        return 2
    return 3


def _winding(px, py, rings) -> int:
    total = 0
    for ring in rings:
        n = len(ring)
        ax, ay = ring[-1]
        qa = None
        for i in range(n):
            bx, by = ring[i]
            dax, day = ax - px, ay - py
            dbx, dby = bx - px, by - py
            c = dax * dby - day * dbx
            if c == 0 and dax * dbx + day * dby <= 0:
                raise OnBoundary((px, py))
            if qa is None:
                qa = _quadrant(dax, day)
            qb = _quadrant(dbx, dby)
            delta = qb - qa
            if delta == 3:
                delta = -1
            elif delta == -3:
                delta = 1
            elif delta in (2, -2):
                delta = 2 if c > 0 else -2
            total += delta
            ax, ay, qa = bx, by, qb
    return total // 4


def _inside(winding: int, rule: Rule, complement: bool) -> bool:
    inside = winding != 0 if rule is Rule.NONZERO else winding % 2 == 1
    return inside != complement


def membership(p: Point, shape, rule: Rule = None) -> bool:
    rings, own_rule, complement = _rings_of(shape)
    return _inside(_winding(p.x, p.y, rings), rule or own_rule, complement)


class _Scaled:
    def __init__(self, shape, scale):
        rings, self.rule, self.complement = _rings_of(shape)
        self.rings = [[(int(p.x * scale), int(p.y * scale)) for p in r] for r in rings]

    def contains(self, px, py) -> bool:
        return _inside(_winding(px, py, self.rings), self.rule, self.complement)


def _combine(op, in_clipper: bool, in_subject: bool) -> bool:
    name = getattr(op, "value", op)
    if name == "intersection":
        return in_clipper and in_subject
    if name == "union":
        return in_clipper or in_subject
    if name == "difference":
        return in_subject and not in_clipper
    raise ValueError(f"unknown operation {op!r}")


def _bbox(ring_sets: Sequence[List[List[Point]]]):
    xs = [p.x for rings in ring_sets for r in rings for p in r]
    ys = [p.y for rings in ring_sets for r in rings for p in r]
    return min(xs), min(ys), max(xs), max(ys)


def check_boolean(clipper, subject, op, result, plan: SamplePlan = None) -> Report:
    """Compare ``result`` with the pointwise boolean of the inputs at sampled points."""
    plan = plan or SamplePlan()
    shapes = [clipper, subject, result]
    ring_sets = [_rings_of(s)[0] for s in shapes]
    x0, y0, x1, y1 = _bbox(ring_sets[:2])
    w, h = (x1 - x0) or mpq(1), (y1 - y0) or mpq(1)
    x0, y0 = x0 - w * plan.inflate, y0 - h * plan.inflate
    w, h = w * (1 + 2 * plan.inflate), h * (1 + 2 * plan.inflate)
    step_x, step_y = w / (2 * plan.grid), h / (2 * plan.grid)

    dens = {int(v.denominator) for v in (x0, y0, step_x, step_y)}
    for rings in ring_sets:
        for r in rings:
            for p in r:
                dens.add(int(p.x.denominator))
                dens.add(int(p.y.denominator))
    scale = lcm(*dens)
    scaled = [_Scaled(s, scale) for s in shapes]
    sx0, sy0 = int(x0 * scale), int(y0 * scale)
    ssx, ssy = int(step_x * scale), int(step_y * scale)

    rng = random.Random(plan.seed)
    report = Report(samples=0)
    while report.samples < plan.count:
        for _ in range(plan.max_attempts):
            px = sx0 + (2 * rng.randrange(plan.grid) + 1) * ssx
            py = sy0 + (2 * rng.randrange(plan.grid) + 1) * ssy
            try:
                c, s, r = (sh.contains(px, py) for sh in scaled)
            except OnBoundary:
                continue
            break
        else:
            raise RuntimeError("could not find a sample point off every boundary")
        report.samples += 1
        expected = _combine(op, c, s)
        if expected != r:
            pt = Point(mpq(px, scale), mpq(py, scale))
            report.witnesses.append((pt, expected, r))
    return report
