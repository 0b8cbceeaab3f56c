"""Generated degenerate polygon pairs on a quarter-unit grid over [0, 4]^2.

Shapes are x-monotone (slanted or staircase), convex hulls, or rectangles with
holes, always simple. Partners are often derived from the first shape by
grid translations and reflections, which forces shared edges, vertex-on-edge
and vertex-on-vertex contacts.
"""
import random
from dataclasses import dataclass
from typing import List, Optional

from gmpy2 import mpq

from .geometry import Point, cross3, signed_area2
from .model import Hand, Polygon, Rule, is_simple

Q = mpq(1, 4)
GRID = [Q * i for i in range(17)]
COARSE = [mpq(i, 2) for i in range(9)]


@dataclass
class Case:
    name: str
    clipper: List[List[Point]]
    subject: List[List[Point]]
    rule: Rule = Rule.NONZERO
    clipper_hands: Optional[List[Optional[Hand]]] = None
    subject_hands: Optional[List[Optional[Hand]]] = None

    def polygons(self):
        return (
            Polygon.from_points(self.clipper, rule=self.rule, hands=self.clipper_hands),
            Polygon.from_points(self.subject, rule=self.rule, hands=self.subject_hands),
        )


def _values(rng):
    return COARSE if rng.random() < 0.6 else GRID


def _dedupe(points):
    out = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def x_monotone(rng, stairs=False, max_cols=8):
    vals = _values(rng)
    k = rng.randint(2, max_cols)
    xs = sorted(rng.sample(vals, min(k, len(vals))))
    while True:
        bottoms, tops = [], []
        for _ in xs:
            b, t = sorted(rng.sample(vals, 2))
            bottoms.append(b)
            tops.append(t)
        if not stairs:
            break
        if all(
            max(bottoms[i], bottoms[i + 1]) < min(tops[i], tops[i + 1])
            for i in range(len(xs) - 1)
        ):
            break
    if stairs:
        xs = xs + [xs[-1] + (xs[-1] - xs[-2])] if len(xs) > 1 else xs
        low = []
        high = []
        for i in range(len(xs) - 1):
            low += [Point(xs[i], bottoms[i]), Point(xs[i + 1], bottoms[i])]
            high += [Point(xs[i], tops[i]), Point(xs[i + 1], tops[i])]
        pts = low + high[::-1]
    else:
        pts = [Point(x, b) for x, b in zip(xs, bottoms)]
        pts += [Point(x, t) for x, t in reversed(list(zip(xs, tops)))]
    return _dedupe(pts)


def convex(rng):
    vals = _values(rng)
    while True:
        pts = {Point(rng.choice(vals), rng.choice(vals)) for _ in range(rng.randint(3, 9))}
        hull = _hull(sorted(pts))
        if len(hull) >= 3:
            return hull


def _hull(pts):
    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross3(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def _rect(x0, y0, x1, y1):
    return [Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)]


def holed(rng):
    vals = COARSE
    while True:
        x0, x1 = sorted(rng.sample(vals, 2))
        y0, y1 = sorted(rng.sample(vals, 2))
        inner_x = [v for v in GRID if x0 < v < x1]
        inner_y = [v for v in GRID if y0 < v < y1]
        if len(inner_x) >= 2 and len(inner_y) >= 2:
            break
    hx0, hx1 = sorted(rng.sample(inner_x, 2))
    hy0, hy1 = sorted(rng.sample(inner_y, 2))
    return [_rect(x0, y0, x1, y1), _rect(hx0, hy0, hx1, hy1)[::-1]]


def _transform(contours, rng):
    dx = rng.choice([0, 0, Q, 2 * Q, 4 * Q, -2 * Q, -4 * Q])
    dy = rng.choice([0, 0, Q, 2 * Q, 4 * Q, -2 * Q, -4 * Q])
    flip_x = rng.random() < 0.3
    swap = rng.random() < 0.2
    out = []
    for ring in contours:
        pts = []
        for p in ring:
            x, y = p.x, p.y
            if swap:
                x, y = y, x
            if flip_x:
                x = 4 - x
            pts.append(Point(x + dx, y + dy))
        out.append(pts)
    if flip_x != swap:
        out = [r[::-1] for r in out]
    return out


def _orient(contours, hand: Hand):
    """Orient so the outer contour is ccw (LEFT) or cw (RIGHT), holes opposite."""
    outer_ccw = signed_area2(contours[0]) > 0
    want_ccw = hand is Hand.LEFT
    if outer_ccw != want_ccw:
        return [r[::-1] for r in contours]
    return contours


def random_shape(rng):
    pick = rng.random()
    if pick < 0.35:
        shape = [x_monotone(rng)]
    elif pick < 0.65:
        shape = [x_monotone(rng, stairs=True)]
    elif pick < 0.85:
        shape = [convex(rng)]
    else:
        shape = holed(rng)
    if rng.random() < 0.3:
        shape = [[Point(p.y, p.x) for p in r][::-1] for r in shape]
    return shape


def _valid(contours) -> bool:
    return all(len(r) >= 3 and is_simple(r) and signed_area2(r) != 0 for r in contours)


def generate_pairs(count: int = 200, seed: int = 1) -> List[Case]:
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        a = random_shape(rng)
        roll = rng.random()
        if roll < 0.45:
            b = _transform(a, rng)
        elif roll < 0.55:
            b = [list(r) for r in a]
        else:
            b = random_shape(rng)
        if not (_valid(a) and _valid(b)):
            continue
        if sum(len(r) for r in a) > 64 or sum(len(r) for r in b) > 64:
            continue
        hand_a = rng.choice([Hand.LEFT, Hand.RIGHT])
        hand_b = rng.choice([Hand.LEFT, Hand.RIGHT])
        a, b = _orient(a, hand_a), _orient(b, hand_b)
        i = len(cases)
        cases.append(Case(f"case{i:03d}-{hand_a.value}-{hand_b.value}", a, b))
    return cases


def scope_violation_cases(count: int = 12, seed: int = 7) -> List[Case]:
    """Pairs where a clipper/subject meeting point is a self-intersection of one input."""
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        cx = rng.choice(COARSE[2:7])
        cy = rng.choice(COARSE[2:7])
        r = rng.choice([mpq(1, 2), mpq(1)])
        kind = i % 3
        if kind == 0:
            # bow tie crossing at (cx, cy)
            bad = [Point(cx - r, cy - r), Point(cx + r, cy + r),
                   Point(cx + r, cy - r), Point(cx - r, cy + r)]
            hands = [Hand.LEFT]
        elif kind == 1:
            # pinch: two lobes sharing the vertex (cx, cy)
            bad = [Point(cx, cy), Point(cx + r, cy - r), Point(cx + 2 * r, cy),
                   Point(cx, cy), Point(cx - 2 * r, cy), Point(cx - r, cy + r)]
            hands = [Hand.LEFT]
        else:
            bad = None
        if bad is not None:
            # subject passes straight through the self-intersection point
            other = _rect(cx - 3 * r, cy - r / 2, cx, cy + r / 2) if rng.random() < 0.5 \
                else [Point(cx, cy), Point(cx + 3 * r, cy + r / 4), Point(cx + 3 * r, cy + r)]
            if rng.random() < 0.5:
                cases.append(Case(f"scope{i:02d}-clipper", [bad], [other], clipper_hands=hands))
            else:
                cases.append(Case(f"scope{i:02d}-subject", [other], [bad], subject_hands=hands))
        else:
            # two contours of one polygon touching at a corner the other input passes through
            left = _rect(cx - r, cy - r, cx, cy)
            right = _rect(cx, cy, cx + r, cy + r)
            other = [Point(cx, cy), Point(cx + r / 2, cy - 2 * r), Point(cx + 2 * r, cy - r / 2)]
            if rng.random() < 0.5:
                other = [Point(cx - 2 * r, cy + r), Point(cx + 2 * r, cy - r), Point(cx + 2 * r, cy + r)]
            cases.append(Case(f"scope{i:02d}-touching", [left, right], [other]))
    return cases
